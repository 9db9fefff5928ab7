#include "oddzeta/bernoulli.hpp"

#include <stdexcept>

#include "oddzeta/quadrature.hpp"

namespace oddzeta {

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return c;
}

mpz_class factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace

BernoulliCache& BernoulliCache::global() {
    static BernoulliCache cache;
    return cache;
}

Rational BernoulliCache::number(std::size_t n) {
    std::lock_guard lock(mutex_);
    if (table_.empty()) {
        table_.push_back(Rational(1));
        table_.push_back(Rational(-1, 2));
    }
    while (table_.size() <= n) {
        const std::size_t m = table_.size();
        if (m % 2 == 1) {
            table_.push_back(Rational(0));
            continue;
        }
        // B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k; odd B_k vanish for k >= 3
        mpz_class c = 1;  // C(m+1, 0)
        mpq_class sum = 0;
        for (std::size_t k = 0; k < m; ++k) {
            if (k <= 1 || k % 2 == 0) {
                mpq_class term(c);
                term *= table_[k].raw();
                sum += term;
            }
            c *= static_cast<unsigned long>(m + 1 - k);
            c /= static_cast<unsigned long>(k + 1);
        }
        sum /= static_cast<unsigned long>(m + 1);
        sum = -sum;
        table_.push_back(Rational::from_raw(std::move(sum)));
    }
    return table_[n];
}

void BernoulliCache::ensure(std::size_t n) { number(n); }

Rational bernoulli_number(std::size_t n) { return BernoulliCache::global().number(n); }

BernoulliPolynomial::BernoulliPolynomial(unsigned degree) : degree_(degree) {
    coefficients_.reserve(degree + 1);
    for (unsigned j = 0; j <= degree; ++j) {
        mpq_class c(binomial(degree, j));
        c *= bernoulli_number(j).raw();
        coefficients_.push_back(Rational::from_raw(std::move(c)));
    }
}

Rational BernoulliPolynomial::operator()(const Rational& x) const {
    Rational acc = coefficients_[0];
    for (unsigned j = 1; j <= degree_; ++j) {
        acc = acc * x + coefficients_[j];
    }
    return acc;
}

BigReal BernoulliPolynomial::operator()(const BigReal& x) const {
    BigReal acc(coefficients_[0], x.context());
    for (unsigned j = 1; j <= degree_; ++j) {
        acc = acc * x + BigReal(coefficients_[j], x.context());
    }
    return acc;
}

BernoulliPolynomial BernoulliPolynomial::derivative() const {
    BernoulliPolynomial d;
    if (degree_ == 0) {
        d.degree_ = 0;
        d.coefficients_.push_back(Rational(0));
        return d;
    }
    d.degree_ = degree_ - 1;
    d.coefficients_.reserve(degree_);
    for (unsigned j = 0; j < degree_; ++j) {
        d.coefficients_.push_back(coefficients_[j] * Rational(static_cast<long>(degree_ - j)));
    }
    return d;
}

Rational rbn_plus(unsigned n) {
    if (n < 1) throw std::invalid_argument("rbn_plus: n must be positive");
    Rational b = bernoulli_number(2 * n);
    return (n % 2 == 1) ? b : -b;
}

BigReal rbn_minus(unsigned n, const PrecisionContext& ctx) {
    if (n < 1) throw std::invalid_argument("rbn_minus: n must be positive");
    const BernoulliPolynomial poly(2 * n + 1);
    const BigReal pi_value = pi(ctx);

    // B_{2n+1}(x)·cot(πx) -> (2n+1)·B_{2n}/π at both endpoints
    // (B_{2n+1} ~ (2n+1)·B_{2n}·x near 0, cot(πx) ~ 1/(πx); symmetric at 1)
    Rational slope = bernoulli_number(2 * n) * Rational(2 * n + 1);
    BigReal limit = BigReal(slope, ctx) / pi_value;

    Integrand f = [&](const BigReal& x) { return poly(x) * cot(pi_value * x); };
    BigReal integral = integrate_01(f, ctx, EndpointLimits{limit, limit});
    return (n % 2 == 1) ? integral : -integral;
}

BigReal PiPower::to_real(const PrecisionContext& ctx) const {
    return BigReal(coefficient, ctx) * pow(pi(ctx), static_cast<long>(exponent));
}

PiPower aux_integral_cos(unsigned n, unsigned m) {
    if (n < 1 || m < 1) throw std::invalid_argument("aux_integral_cos: n, m must be positive");
    if (m % 2 == 1) return PiPower{Rational(0), 0};
    mpq_class c(factorial(2 * n));
    mpz_class mp;
    mpz_ui_pow_ui(mp.get_mpz_t(), m, 2 * n);
    c /= mp;
    if (n % 2 == 0) c = -c;
    return PiPower{Rational::from_raw(std::move(c)), -static_cast<int>(2 * n)};
}

PiPower aux_integral_sin(unsigned n, unsigned m) {
    if (n < 1 || m < 1) throw std::invalid_argument("aux_integral_sin: n, m must be positive");
    if (m % 2 == 1) return PiPower{Rational(0), 0};
    mpq_class c(factorial(2 * n + 1));
    mpz_class mp;
    mpz_ui_pow_ui(mp.get_mpz_t(), m, 2 * n + 1);
    c /= mp;
    if (n % 2 == 0) c = -c;
    return PiPower{Rational::from_raw(std::move(c)), -static_cast<int>(2 * n + 1)};
}

}  // namespace oddzeta
