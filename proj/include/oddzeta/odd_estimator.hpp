#pragma once

#include <utility>

#include "oddzeta/big_real.hpp"
#include "oddzeta/precision.hpp"

namespace oddzeta {

/// Geometric-mean estimate of ζ(2n+1) together with its bracketing bounds
/// and the measured error against the reference oracle.
struct OddEstimate {
    unsigned n;           // target argument is 2n+1
    BigReal zeta_l;       // upper bound on ζ(2n+1), from ρ(2n)/2
    BigReal zeta_r;       // lower bound on ζ(2n+1), from 2ρ(2n+2)
    BigReal zeta_gm;      // geometric-mean estimate
    BigReal reference;    // oracle value at ≥ n+30 digits
    BigReal abs_error;    // |zeta_gm − reference|
};

/// ρ(2n+1)/ρ(2n) with the reference ζ(2n+1) and exact ζ(2n);
/// tends to 1/2 as n grows.
BigReal recurrence_ratio(unsigned n, const PrecisionContext& ctx);

/// (ζ^l, ζ^r): ζ^l = ζ_from_ρ(ρ(2n)/2), ζ^r = ζ_from_ρ(2ρ(2n+2)), both at
/// s = 2n+1. Guarantees ζ^l > ζ^r > 1 (violation would indicate an
/// internal inconsistency and throws).
std::pair<BigReal, BigReal> zeta_bounds(unsigned n, const PrecisionContext& ctx);

/// The direct formula method: ρ(2n) and ρ(2n+2) from the exact even
/// values, ρ_gm = √(ρ(2n)·ρ(2n+2)), mapped back at s = 2n+1. The
/// reference and error fields are computed at max(P, 40, n+30) digits.
OddEstimate zeta_odd_geomean(unsigned n, const PrecisionContext& ctx);

/// ζ(s) from the closed asymptotic form
///   1/ζ(s) = (2^(s−1)−1)/2^(2s−3)·(2/ζ(2) − 1) + (2^(s−1)−1)/2^(s−1),
/// exact at s = 2 by construction.
BigReal asymptotic_zeta(const BigReal& s, const PrecisionContext& ctx);

/// Both inequality checks evaluated from exact even values:
///   lhs1 = 4/η(2n+2) − 1/η(2n)            (holds1: lhs1 > 3)
///   lhs2 = η(2n), rhs2 = (2^(2n−1)−2)/(2^(2n−1)−1)   (holds2: lhs2 > rhs2)
struct Lemma1Margins {
    BigReal lhs1;
    bool holds1;
    BigReal lhs2;
    BigReal rhs2;
    bool holds2;
};
Lemma1Margins lemma1_check(unsigned n, const PrecisionContext& ctx);

/// Asymptotic density of s-free integers, 1/ζ(s) by the closed form above.
BigReal sfree_density(unsigned s, const PrecisionContext& ctx);

/// Estimated count of s-free integers in [1, x]: x·density.
BigReal sfree_count_estimate(unsigned long x, unsigned s, const PrecisionContext& ctx);

}  // namespace oddzeta
