#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "oddzeta/precision.hpp"
#include "oddzeta/rational.hpp"

namespace oddzeta {

/// Arbitrary-precision real bound to the PrecisionContext it was produced
/// under. Values are immutable after construction; binary operations carry
/// the context of the widest-precision operand. Rounding is to nearest.
class BigReal {
public:
    explicit BigReal(const PrecisionContext& ctx);  // zero
    BigReal(long value, const PrecisionContext& ctx);
    BigReal(double value, const PrecisionContext& ctx);
    BigReal(const Rational& value, const PrecisionContext& ctx);

    BigReal(const BigReal& other);
    BigReal(BigReal&& other) noexcept;
    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;
    ~BigReal();

    /// Parses decimal or scientific notation ("1.05e-97").
    static BigReal from_string(std::string_view text, const PrecisionContext& ctx);

    const PrecisionContext& context() const { return ctx_; }

    /// Explicit conversion point: rounds to the target context.
    BigReal round_to(const PrecisionContext& ctx) const;

    BigReal operator-() const;
    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);

    friend BigReal operator+(const BigReal& a, long b);
    friend BigReal operator-(const BigReal& a, long b);
    friend BigReal operator-(long a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, long b);
    friend BigReal operator/(const BigReal& a, long b);
    friend BigReal operator/(long a, const BigReal& b);

    bool operator==(const BigReal& rhs) const { return mpfr_equal_p(v_, rhs.v_) != 0; }
    std::partial_ordering operator<=>(const BigReal& rhs) const {
        if (mpfr_unordered_p(v_, rhs.v_)) return std::partial_ordering::unordered;
        int c = mpfr_cmp(v_, rhs.v_);
        return c < 0 ? std::partial_ordering::less
             : c > 0 ? std::partial_ordering::greater
                     : std::partial_ordering::equivalent;
    }
    bool operator==(long rhs) const { return mpfr_cmp_si(v_, rhs) == 0; }
    std::partial_ordering operator<=>(long rhs) const {
        if (mpfr_nan_p(v_)) return std::partial_ordering::unordered;
        int c = mpfr_cmp_si(v_, rhs);
        return c < 0 ? std::partial_ordering::less
             : c > 0 ? std::partial_ordering::greater
                     : std::partial_ordering::equivalent;
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Scientific notation "d.ddd…e±k" with the given significant digits.
    std::string to_string(long significant_digits) const;
    /// Full stored precision; round-trips exactly through from_string.
    std::string to_string() const;
    /// Fixed-point rendering with `decimals` digits after the point.
    std::string to_fixed(long decimals) const;

    /// Decimal exponent k of the scientific form d.ddd…e±k (0 for zero).
    long exponent10() const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    PrecisionContext ctx_;
    mpfr_t v_;
};

BigReal pi(const PrecisionContext& ctx);
/// 2^exponent, exact.
BigReal pow2(long exponent, const PrecisionContext& ctx);
/// 10^exponent.
BigReal pow10(long exponent, const PrecisionContext& ctx);

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log10(const BigReal& x);
BigReal floor(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal cot(const BigReal& x);
BigReal pow(const BigReal& base, const BigReal& exponent);
BigReal pow(const BigReal& base, long exponent);

}  // namespace oddzeta
