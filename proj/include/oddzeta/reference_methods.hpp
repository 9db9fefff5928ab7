#pragma once

#include <map>
#include <vector>

#include "oddzeta/big_real.hpp"
#include "oddzeta/precision.hpp"
#include "oddzeta/zeta_core.hpp"

namespace oddzeta {

/// Gauss–Hermite rule of the given order: nodes are the zeros of the
/// physicists' Hermite polynomial H_N (ascending, symmetric about 0),
/// weights positive with Σw = √π.
struct HermiteRule {
    unsigned order;
    std::vector<BigReal> nodes;
    std::vector<BigReal> weights;
};

/// Builds the rule by sign-change bracketing on a uniform grid over
/// [0, √(2N+1)] followed by high-precision Newton polishing; weights from
/// the numerically stable form 2^(N−1)·N!·√π/(N²·H_{N−1}(x_k)²).
/// Throws if polishing fails to converge, naming the node index.
HermiteRule hermite_rule(unsigned order, const PrecisionContext& ctx);

/// H_N(x) by the three-term recurrence (exposed for tests).
BigReal hermite_polynomial(unsigned order, const BigReal& x);

/// ζ(s) as the ratio of the two Gauss–Hermite integrals
///   ∫ |x|^(2s−1)·e^(−x²)/(1−e^(−x²)) dx / ∫ |x|^(2s−1)·e^(−x²) dx,
/// both evaluated with the same N-point rule. A node at x = 0 (odd N)
/// contributes 0 to both for s ≥ 2.
ZetaValue zeta_integral_method(const BigReal& s, unsigned nodes, const PrecisionContext& ctx);
ZetaValue zeta_integral_method(const BigReal& s, const HermiteRule& rule,
                               const PrecisionContext& ctx);

/// Lower odd values ζ(2m+1) consumed by the rapidly convergent series;
/// entries must be filled in increasing m.
struct SeriesState {
    std::map<unsigned, BigReal> known_odd;
    unsigned terms = 0;  // partial-sum length of the last evaluation
};

/// Rapidly convergent series for ζ(2n+1):
///   (−1)^(n−1)·(2π)^(2n)/((2n)!·[2^(2n)(2n−3)−2n+1]) · [ finite sum over
///   m = 1..n−1 + 2·Σ_{k=0}^{N₂} ζ(2k)/((2k+2n−1)(k+n)(2k+2n+1)·2^(2k)) ]
/// with ζ(0) = −1/2 and ζ(2k) from the exact even values. Requires state
/// to hold ζ(2m+1) for all 1 ≤ m < n; records the result at n.
ZetaValue zeta_series_method(unsigned n, unsigned terms, const PrecisionContext& ctx,
                             SeriesState& state);

/// Closed-form truncation bound for the n = 1 series remainder:
///   (4π²/45)·1/((2N+3)(N+2)(2N+5)(4^N − 1/2)).
BigReal series_error_bound(unsigned terms, const PrecisionContext& ctx);

/// Large-N asymptote of the bound: −2·lg2·(N+1) − 3·lgN (a base-10 log).
BigReal series_error_asymptote(unsigned terms, const PrecisionContext& ctx);

}  // namespace oddzeta
