#pragma once

// Test-only oracles, implemented independently of the library paths they
// check: the explicit double-sum Bernoulli formula (not the recurrence),
// plain partial sums, sieves, and closed forms.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "oddzeta/big_real.hpp"
#include "oddzeta/precision.hpp"
#include "oddzeta/rational.hpp"

namespace oddzeta::oracle {

/// B_n by the explicit formula B_n = Σ_{k=0}^{n} 1/(k+1)·Σ_{j=0}^{k}
/// (−1)^j·C(k,j)·j^n — a different route than the library's recurrence.
Rational bernoulli_explicit(unsigned n);

/// Plain direct sum Σ_{k=1}^{terms} k^(−s) for integer s.
BigReal zeta_direct_sum(long s, unsigned terms, const PrecisionContext& ctx);

/// Alternating-series bracket for η(s): partial sums S_{2m} and S_{2m+1};
/// the true η lies strictly between them.
std::pair<BigReal, BigReal> eta_partial_sum_bracket(long s, unsigned m,
                                                    const PrecisionContext& ctx);

/// Exact count of s-free integers in [1, x] by sieve.
std::uint64_t sfree_count_sieve(std::uint64_t x, unsigned s);

/// Γ(s) for integer s ≥ 1, i.e. (s−1)!.
Rational gamma_integer(unsigned s);

/// ∫₀¹ p(x) dx for a polynomial given by descending-power coefficients.
Rational polynomial_integral_01(const std::vector<Rational>& descending_coefficients);

/// √π·(2j−1)!!/2^j = ∫ x^(2j)·e^(−x²) dx over the real line, as the
/// rational multiplier of √π.
Rational even_moment_sqrt_pi_multiplier(unsigned j);

}  // namespace oddzeta::oracle
