#pragma once

#include <cstddef>
#include <mutex>
#include <vector>

#include "oddzeta/big_real.hpp"
#include "oddzeta/precision.hpp"
#include "oddzeta/rational.hpp"

namespace oddzeta {

/// Memoized exact Bernoulli numbers under the generating-function
/// convention t·e^{tx}/(e^t − 1), i.e. B_1 = −1/2 (both sign conventions
/// circulate; this library uses B_1 = −1/2 throughout). Grown by the
/// O(n²) exact-rational recurrence Σ_{k=0}^{n} C(n+1,k)·B_k = 0.
/// Thread-safe: concurrent readers observe consistent exact values.
class BernoulliCache {
public:
    static BernoulliCache& global();

    Rational number(std::size_t n);
    void ensure(std::size_t n);

private:
    std::mutex mutex_;
    std::vector<Rational> table_;
};

/// Exact B_n from the shared cache; B_1 = −1/2.
Rational bernoulli_number(std::size_t n);

/// Bernoulli polynomial B_n(x) = Σ_j C(n,j)·B_j·x^(n−j) with exact
/// coefficients stored by descending power (index j holds C(n,j)·B_j).
class BernoulliPolynomial {
public:
    explicit BernoulliPolynomial(unsigned degree);

    unsigned degree() const { return degree_; }
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    Rational operator()(const Rational& x) const;
    BigReal operator()(const BigReal& x) const;

    /// B_n′(x); equals n·B_{n−1}(x) coefficient-wise.
    BernoulliPolynomial derivative() const;

private:
    BernoulliPolynomial() = default;
    unsigned degree_ = 0;
    std::vector<Rational> coefficients_;
};

/// Even-family reduced Bernoulli number B_n⁺ = (−1)^(n+1)·B_{2n}; always positive.
Rational rbn_plus(unsigned n);

/// Odd-family reduced Bernoulli number
/// B_n⁻ = (−1)^(n+1)·∫₀¹ B_{2n+1}(x)·cot(πx) dx, evaluated numerically
/// with the analytic endpoint limits (2n+1)·B_{2n}/π at both ends.
BigReal rbn_minus(unsigned n, const PrecisionContext& ctx);

/// Exact value of the form coefficient·π^exponent.
struct PiPower {
    Rational coefficient;
    int exponent = 0;

    BigReal to_real(const PrecisionContext& ctx) const;
    bool operator==(const PiPower&) const = default;
};

/// I_c(n,m) = ∫₀¹ B_{2n}(t)·cos(mπt) dt: zero for odd m,
/// (−1)^(n+1)·(2n)!/(mπ)^(2n) for even m.
PiPower aux_integral_cos(unsigned n, unsigned m);

/// I_s(n,m) = ∫₀¹ B_{2n+1}(t)·sin(mπt) dt: zero for odd m,
/// (−1)^(n+1)·(2n+1)!/(mπ)^(2n+1) for even m.
PiPower aux_integral_sin(unsigned n, unsigned m);

}  // namespace oddzeta
