#include "oddzeta/odd_estimator.hpp"

#include <stdexcept>

#include "oddzeta/zeta_core.hpp"

namespace oddzeta {

BigReal recurrence_ratio(unsigned n, const PrecisionContext& ctx) {
    if (n < 1) throw std::invalid_argument("recurrence_ratio: n must be positive");
    BigReal s_odd(2L * n + 1, ctx);
    BigReal rho_odd = rho_from_zeta(s_odd, zeta_reference(s_odd, ctx).value);
    BigReal rho_even = rho_from_zeta(BigReal(2L * n, ctx), zeta_even(n, ctx).value);
    return rho_odd / rho_even;
}

std::pair<BigReal, BigReal> zeta_bounds(unsigned n, const PrecisionContext& ctx) {
    if (n < 1) throw std::invalid_argument("zeta_bounds: n must be positive");
    // the l/r gap shrinks like 3^(-2n); certify the chain at a precision
    // that resolves it, then round to the caller's context
    const long margin_digits = static_cast<long>(2.0 * n * 0.47712125471966244) + 20;
    const PrecisionContext work = ctx.widened_to(margin_digits);
    BigReal s_odd(2L * n + 1, work);
    BigReal rho_lo = rho_from_zeta(BigReal(2L * n, work), zeta_even(n, work).value);
    BigReal rho_hi = rho_from_zeta(BigReal(2L * n + 2, work), zeta_even(n + 1, work).value);
    BigReal zl = zeta_from_rho(s_odd, rho_lo / 2L);
    BigReal zr = zeta_from_rho(s_odd, rho_hi * 2L);
    if (!(zl > zr && zr > 1L))
        throw std::logic_error("zeta_bounds: inequality chain violated");
    return {zl.round_to(ctx), zr.round_to(ctx)};
}

OddEstimate zeta_odd_geomean(unsigned n, const PrecisionContext& ctx) {
    if (n < 1) throw std::invalid_argument("zeta_odd_geomean: n must be positive");
    BigReal s_odd(2L * n + 1, ctx);
    BigReal rho_lo = rho_from_zeta(BigReal(2L * n, ctx), zeta_even(n, ctx).value);
    BigReal rho_hi = rho_from_zeta(BigReal(2L * n + 2, ctx), zeta_even(n + 1, ctx).value);
    BigReal rho_gm = sqrt(rho_lo * rho_hi);
    BigReal zgm = zeta_from_rho(s_odd, rho_gm);

    auto [zl, zr] = zeta_bounds(n, ctx);

    long ref_digits = ctx.digits();
    if (ref_digits < 40) ref_digits = 40;
    if (ref_digits < static_cast<long>(n) + 30) ref_digits = static_cast<long>(n) + 30;
    const PrecisionContext ref_ctx = ctx.widened_to(ref_digits);
    BigReal reference = zeta_reference(BigReal(2L * n + 1, ref_ctx), ref_ctx).value;
    BigReal error = abs(zgm.round_to(ref_ctx) - reference);

    return OddEstimate{n,
                       std::move(zl),
                       std::move(zr),
                       std::move(zgm),
                       std::move(reference),
                       std::move(error)};
}

BigReal asymptotic_zeta(const BigReal& s, const PrecisionContext& ctx) {
    if (!(s.to_double() >= 2.0))
        throw std::domain_error("asymptotic_zeta: requires s >= 2");
    const BigReal sw = s.round_to(ctx);
    const BigReal two(2L, ctx);
    const BigReal p = pow(two, sw - 1L);            // 2^(s-1)
    const BigReal q = pow(two, sw * 2L - 3L);       // 2^(2s-3)
    const BigReal zeta2 = zeta_even(1, ctx).value;  // pi^2/6
    BigReal inverse = (p - 1L) / q * (2L / zeta2 - 1L) + (p - 1L) / p;
    return 1L / inverse;
}

Lemma1Margins lemma1_check(unsigned n, const PrecisionContext& ctx) {
    if (n < 1) throw std::invalid_argument("lemma1_check: n must be positive");
    BigReal eta_2n = eta_from_zeta(BigReal(2L * n, ctx), zeta_even(n, ctx).value);
    BigReal eta_2n2 = eta_from_zeta(BigReal(2L * n + 2, ctx), zeta_even(n + 1, ctx).value);
    BigReal lhs1 = 4L / eta_2n2 - 1L / eta_2n;
    // (2^(2n-1)-2)/(2^(2n-1)-1)
    BigReal half_power = pow2(2L * n - 1, ctx);
    BigReal rhs2 = (half_power - 2L) / (half_power - 1L);
    bool holds1 = lhs1 > 3L;
    bool holds2 = eta_2n > rhs2;
    return Lemma1Margins{std::move(lhs1), holds1, std::move(eta_2n), std::move(rhs2), holds2};
}

BigReal sfree_density(unsigned s, const PrecisionContext& ctx) {
    if (s < 2) throw std::invalid_argument("sfree_density: s must be at least 2");
    return 1L / asymptotic_zeta(BigReal(static_cast<long>(s), ctx), ctx);
}

BigReal sfree_count_estimate(unsigned long x, unsigned s, const PrecisionContext& ctx) {
    if (x < 1) throw std::invalid_argument("sfree_count_estimate: x must be positive");
    return BigReal(static_cast<long>(x), ctx) * sfree_density(s, ctx);
}

}  // namespace oddzeta
