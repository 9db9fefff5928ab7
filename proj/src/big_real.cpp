#include "oddzeta/big_real.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <utility>

namespace oddzeta {

namespace {

const PrecisionContext& wider(const BigReal& a, const BigReal& b) {
    return a.context().bits() >= b.context().bits() ? a.context() : b.context();
}

}  // namespace

BigReal::BigReal(const PrecisionContext& ctx) : ctx_(ctx) {
    mpfr_init2(v_, ctx_.bits());
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, const PrecisionContext& ctx) : ctx_(ctx) {
    mpfr_init2(v_, ctx_.bits());
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(double value, const PrecisionContext& ctx) : ctx_(ctx) {
    mpfr_init2(v_, ctx_.bits());
    mpfr_set_d(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const Rational& value, const PrecisionContext& ctx) : ctx_(ctx) {
    mpfr_init2(v_, ctx_.bits());
    mpfr_set_q(v_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) : ctx_(other.ctx_) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept : ctx_(other.ctx_) {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this != &other) {
        ctx_ = other.ctx_;
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    if (this != &other) {
        ctx_ = other.ctx_;
        mpfr_swap(v_, other.v_);
    }
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::from_string(std::string_view text, const PrecisionContext& ctx) {
    BigReal r(ctx);
    std::string buf(text);
    if (mpfr_set_str(r.v_, buf.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("BigReal: cannot parse '" + buf + "'");
    return r;
}

BigReal BigReal::round_to(const PrecisionContext& ctx) const {
    BigReal r(ctx);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::operator-() const {
    BigReal r(ctx_);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r(wider(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r(wider(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r(wider(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
    BigReal r(wider(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator+(const BigReal& a, long b) {
    BigReal r(a.context());
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

BigReal operator-(const BigReal& a, long b) {
    BigReal r(a.context());
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

BigReal operator-(long a, const BigReal& b) {
    BigReal r(b.context());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator*(const BigReal& a, long b) {
    BigReal r(a.context());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

BigReal operator/(const BigReal& a, long b) {
    BigReal r(a.context());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

BigReal operator/(long a, const BigReal& b) {
    BigReal r(b.context());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

std::string BigReal::to_string(long significant_digits) const {
    if (significant_digits < 1) significant_digits = 1;
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
    if (is_zero()) {
        std::string s = "0";
        if (significant_digits > 1) s += "." + std::string(significant_digits - 1, '0');
        return s + "e+0";
    }
    mpfr_exp_t e = 0;
    char* digits = mpfr_get_str(nullptr, &e, 10, significant_digits, v_, MPFR_RNDN);
    std::string d(digits);
    mpfr_free_str(digits);
    std::string out;
    std::size_t i = 0;
    if (d[0] == '-') {
        out += '-';
        i = 1;
    }
    out += d[i];
    if (d.size() > i + 1) out += "." + d.substr(i + 1);
    long exp10 = static_cast<long>(e) - 1;
    out += "e" + std::string(exp10 < 0 ? "" : "+") + std::to_string(exp10);
    return out;
}

std::string BigReal::to_string() const {
    // n = 0 asks mpfr for enough digits to round-trip at the stored precision
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
    if (is_zero()) return "0e+0";
    mpfr_exp_t e = 0;
    char* digits = mpfr_get_str(nullptr, &e, 10, 0, v_, MPFR_RNDN);
    std::string d(digits);
    mpfr_free_str(digits);
    std::string out;
    std::size_t i = 0;
    if (d[0] == '-') {
        out += '-';
        i = 1;
    }
    out += d[i];
    if (d.size() > i + 1) out += "." + d.substr(i + 1);
    long exp10 = static_cast<long>(e) - 1;
    out += "e" + std::string(exp10 < 0 ? "" : "+") + std::to_string(exp10);
    return out;
}

std::string BigReal::to_fixed(long decimals) const {
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%ldRf", decimals);
    char* s = nullptr;
    mpfr_asprintf(&s, fmt, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

long BigReal::exponent10() const {
    if (is_zero() || !is_finite()) return 0;
    // full-precision conversion: the returned e is the true decimal
    // exponent, free of short-digit rounding carry
    mpfr_exp_t e = 0;
    char* digits = mpfr_get_str(nullptr, &e, 10, 0, v_, MPFR_RNDN);
    mpfr_free_str(digits);
    return static_cast<long>(e) - 1;
}

BigReal pi(const PrecisionContext& ctx) {
    BigReal r(ctx);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

BigReal pow2(long exponent, const PrecisionContext& ctx) {
    BigReal r(1L, ctx);
    mpfr_mul_2si(r.raw(), r.raw(), exponent, MPFR_RNDN);
    return r;
}

BigReal pow10(long exponent, const PrecisionContext& ctx) {
    BigReal r(10L, ctx);
    mpfr_pow_si(r.raw(), r.raw(), exponent, MPFR_RNDN);
    return r;
}

#define ODDZETA_UNARY(name, mpfr_fn)                 \
    BigReal name(const BigReal& x) {                 \
        BigReal r(x.context());                      \
        mpfr_fn(r.raw(), x.raw(), MPFR_RNDN);        \
        return r;                                    \
    }

ODDZETA_UNARY(abs, mpfr_abs)
ODDZETA_UNARY(sqrt, mpfr_sqrt)
ODDZETA_UNARY(exp, mpfr_exp)
ODDZETA_UNARY(log, mpfr_log)
ODDZETA_UNARY(log10, mpfr_log10)
ODDZETA_UNARY(sin, mpfr_sin)
ODDZETA_UNARY(cos, mpfr_cos)
ODDZETA_UNARY(cot, mpfr_cot)
#undef ODDZETA_UNARY

BigReal floor(const BigReal& x) {
    BigReal r(x.context());
    mpfr_floor(r.raw(), x.raw());
    return r;
}

BigReal pow(const BigReal& base, const BigReal& exponent) {
    BigReal r(base.context().bits() >= exponent.context().bits() ? base.context()
                                                                 : exponent.context());
    mpfr_pow(r.raw(), base.raw(), exponent.raw(), MPFR_RNDN);
    return r;
}

BigReal pow(const BigReal& base, long exponent) {
    BigReal r(base.context());
    mpfr_pow_si(r.raw(), base.raw(), exponent, MPFR_RNDN);
    return r;
}

}  // namespace oddzeta
