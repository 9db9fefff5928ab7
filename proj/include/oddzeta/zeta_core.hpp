#pragma once

#include <optional>
#include <string_view>

#include "oddzeta/big_real.hpp"
#include "oddzeta/precision.hpp"

namespace oddzeta {

enum class Method {
    exact_even,
    reference,
    geomean,
    bounds_l,
    bounds_r,
    asymptotic,
    integral,
    series,
};

std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

/// One zeta evaluation: argument, how it was computed, the value, and the
/// decimal digits it was computed at.
struct ZetaValue {
    BigReal argument;
    BigReal value;
    Method method;
    long digits;
};

/// ζ(2n) = (−1)^(n+1)·(2π)^(2n)/(2(2n)!)·B_{2n} from the exact Bernoulli
/// table; for n > exact_threshold the direct sum Σ k^(−2n) is used instead
/// (a handful of terms — the tail is below 2^(−2n)). Both paths agree
/// within 10^(−P+2) wherever both run.
ZetaValue zeta_even(unsigned n, const PrecisionContext& ctx, unsigned exact_threshold = 512);

/// η(s) = (1 − 2^(1−s))·ζ(s). Rejects s ≤ 1, where the factor vanishes.
BigReal eta_from_zeta(const BigReal& s, const BigReal& zeta);
BigReal zeta_from_eta(const BigReal& s, const BigReal& eta);

/// ρ(s) = 1/η(s) − 1 and its inverse ζ = 1/((1+ρ)(1−2^(1−s))).
BigReal rho_from_zeta(const BigReal& s, const BigReal& zeta);
BigReal zeta_from_rho(const BigReal& s, const BigReal& rho);

/// ρ(s) with η obtained from the best available ζ at s: the exact even
/// value when s is an even integer, the reference oracle otherwise.
BigReal rho(const BigReal& s, const PrecisionContext& ctx);

/// Reference oracle for real s ≥ 2: Euler–Maclaurin evaluation
///   Σ_{k=1}^{K} k^(−s) + K^(1−s)/(s−1) − K^(−s)/2
///     + Σ_{j=1}^{J} B_{2j}/(2j)!·s(s+1)…(s+2j−2)·K^(−s−2j+1),
/// with K, J chosen so the first omitted term is below 10^(−P−5).
/// Throws if no parameter choice meets the tolerance under the hard cap.
ZetaValue zeta_reference(const BigReal& s, const PrecisionContext& ctx);

struct FractionalSums {
    BigReal all;
    BigReal even;
    BigReal odd;
};

/// Partial sums Σ_{n=2}^{max_n} frac(ζ(n)) and the even/odd argument
/// splits, with frac(ζ(n)) = ζ(n) − 1 (valid since 1 < ζ(n) < 2 for n ≥ 2).
FractionalSums fractional_sums(unsigned max_n, const PrecisionContext& ctx);

}  // namespace oddzeta
