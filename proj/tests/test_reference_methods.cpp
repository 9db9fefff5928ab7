#include <doctest.h>

#include <stdexcept>

#include "oddzeta/reference_methods.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace oddzeta;
using oddzeta::testing::br;
using oddzeta::testing::within;
using oddzeta::testing::within_pow10;

namespace {

// the classical weight expression -2^{N+1} N! sqrt(pi) / (H_N'(x) H_{N+1}(x)),
// algebraically equal to the stable form but digit-losing at large N
BigReal literal_weight(unsigned order, const BigReal& node, const PrecisionContext& ctx) {
    BigReal h_n = hermite_polynomial(order, node);
    BigReal h_nm1 = hermite_polynomial(order - 1, node);
    BigReal h_np1 = hermite_polynomial(order + 1, node);
    BigReal h_prime = h_nm1 * static_cast<long>(2 * order);
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), order);
    BigReal numerator = BigReal(Rational::from_raw(mpq_class(f)), ctx) * sqrt(pi(ctx)) *
                        pow2(static_cast<long>(order) + 1, ctx);
    (void)h_n;
    return -(numerator / (h_prime * h_np1));
}

// measured remainder of the k-series under its 4*pi^2/15 scaling,
// by brute-force continued summation past the cutoff
BigReal measured_series_remainder(unsigned cutoff, const PrecisionContext& ctx,
                                  unsigned extra = 300) {
    BigReal tail(ctx);
    for (unsigned k = cutoff + 1; k <= cutoff + extra; ++k) {
        mpz_class d = mpz_class(2 * k + 1) * (k + 1) * (2 * k + 3);
        d <<= 2 * k;
        tail = tail + zeta_even(k, ctx).value / BigReal(Rational::from_raw(mpq_class(d)), ctx);
    }
    return pi(ctx) * pi(ctx) * 4L / 15L * tail;
}

}  // namespace

TEST_SUITE("reference_methods") {

TEST_CASE("tiny rules match the analytic nodes and weights") {
    PrecisionContext ctx(40);
    HermiteRule r1 = hermite_rule(1, ctx);
    REQUIRE(r1.nodes.size() == 1);
    CHECK(r1.nodes[0].is_zero());
    CHECK(within_pow10(r1.weights[0], sqrt(pi(ctx)), -38));

    HermiteRule r2 = hermite_rule(2, ctx);
    REQUIRE(r2.nodes.size() == 2);
    BigReal inv_sqrt2 = 1L / sqrt(BigReal(2L, ctx));
    CHECK(within_pow10(r2.nodes[0], -inv_sqrt2, -38));
    CHECK(within_pow10(r2.nodes[1], inv_sqrt2, -38));
    CHECK(within_pow10(r2.weights[0], sqrt(pi(ctx)) / 2L, -38));
    CHECK(within_pow10(r2.weights[1], sqrt(pi(ctx)) / 2L, -38));
}

TEST_CASE("rule invariants for N in {5, 15, 25}") {
    PrecisionContext ctx(60);
    for (unsigned order : {5u, 15u, 25u}) {
        HermiteRule rule = hermite_rule(order, ctx);
        REQUIRE(rule.nodes.size() == order);
        BigReal weight_sum(ctx);
        for (std::size_t i = 0; i < order; ++i) {
            CHECK(rule.weights[i] > 0L);
            // symmetry about zero
            CHECK(within_pow10(rule.nodes[i], -rule.nodes[order - 1 - i],
                               -(ctx.digits() - 5)));
            if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
            weight_sum = weight_sum + rule.weights[i];
        }
        CHECK(within_pow10(weight_sum, sqrt(pi(ctx)), -(ctx.digits() - 3)));

        // exactness on even monomials through degree 2N-2
        for (unsigned j = 0; 2 * j + 2 <= 2 * order; ++j) {
            BigReal moment(ctx);
            for (std::size_t i = 0; i < order; ++i)
                moment = moment + rule.weights[i] * pow(rule.nodes[i], 2L * j);
            BigReal expected =
                BigReal(oracle::even_moment_sqrt_pi_multiplier(j), ctx) * sqrt(pi(ctx));
            CHECK(within(moment, expected, pow10(-(ctx.digits() - 5), ctx) * expected));
        }
    }
}

TEST_CASE("stable weights equal the classical expression at N = 5") {
    PrecisionContext ctx(40);
    HermiteRule rule = hermite_rule(5, ctx);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        BigReal literal = literal_weight(5, rule.nodes[i], ctx);
        CHECK(within_pow10(rule.weights[i], literal, -(ctx.digits() - 5)));
    }
}

TEST_CASE("integral-method denominator reproduces Gamma(s)") {
    PrecisionContext ctx(60);
    HermiteRule rule = hermite_rule(25, ctx);
    // sum w |x|^(2s-1) at s = 3 is Gamma(3) = 2 up to the rule's own error
    BigReal moment(ctx);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        moment = moment + rule.weights[i] * pow(abs(rule.nodes[i]), 5L);
    CHECK(within(moment, BigReal(oracle::gamma_integer(3), ctx), br("1e-3", ctx)));
}

TEST_CASE("integral method error magnitudes at N = 25") {
    PrecisionContext ctx(60);
    HermiteRule rule = hermite_rule(25, ctx);
    BigReal s7(7L, ctx);
    BigReal error7 = abs(zeta_integral_method(s7, rule, ctx).value -
                         zeta_reference(s7, ctx).value);
    CHECK(error7 > br("1e-9", ctx));
    CHECK(error7 < br("1e-6", ctx));

    BigReal s61(61L, ctx);
    BigReal error61 = abs(zeta_integral_method(s61, rule, ctx).value -
                          zeta_reference(s61, ctx).value);
    CHECK(error61 > br("1e-17", ctx));
    CHECK(error61 < br("1e-15", ctx));
}

TEST_CASE("integral method sharpens as the rule grows") {
    PrecisionContext ctx(60);
    BigReal s7(7L, ctx);
    BigReal reference = zeta_reference(s7, ctx).value;
    BigReal error25 = abs(zeta_integral_method(s7, 25, ctx).value - reference);
    BigReal error35 = abs(zeta_integral_method(s7, 35, ctx).value - reference);
    CHECK(error35 < error25);
}

TEST_CASE("series method: first elements of the chain") {
    PrecisionContext ctx(60);
    SeriesState state;
    ZetaValue z3 = zeta_series_method(1, 25, ctx, state);
    CHECK(z3.value.to_fixed(12) == "1.202056903160");
    BigReal error = abs(z3.value - zeta_reference(BigReal(3L, ctx), ctx).value);
    CHECK(error < br("5e-20", ctx));  // measured 2.87e-20 at this cutoff

    ZetaValue z5 = zeta_series_method(2, 25, ctx, state);
    CHECK(z5.value.to_fixed(12) == "1.036927755143");
    CHECK(abs(z5.value - zeta_reference(BigReal(5L, ctx), ctx).value) < br("1e-19", ctx));
    CHECK(state.known_odd.size() == 2);
    CHECK(state.terms == 25);
}

TEST_CASE("series method refuses to skip lower odd values") {
    PrecisionContext ctx(40);
    SeriesState state;
    CHECK_THROWS_AS(zeta_series_method(3, 25, ctx, state), std::invalid_argument);
}

TEST_CASE("closed-form bound values and monotone decay") {
    PrecisionContext ctx(40);
    // N = 1: (4 pi^2/45) / (5*3*7*3.5)
    BigReal expected1 = pi(ctx) * pi(ctx) * 4L / 45L / br("367.5", ctx);
    CHECK(within_pow10(series_error_bound(1, ctx), expected1, -35));
    CHECK(series_error_bound(25, ctx) < br("1.0e-20", ctx));
    for (unsigned n = 1; n <= 50; ++n) {
        CHECK(series_error_bound(n + 1, ctx) < series_error_bound(n, ctx) / 3L);
    }
}

TEST_CASE("measured remainder obeys the bound at every cutoff") {
    PrecisionContext ctx(45);
    for (unsigned cutoff : {5u, 10u, 15u, 20u, 25u}) {
        BigReal measured = measured_series_remainder(cutoff, ctx);
        CHECK(measured > 0L);
        CHECK(measured <= series_error_bound(cutoff, ctx));
    }
}

TEST_CASE("asymptote tracks the bound's logarithm for large N") {
    PrecisionContext ctx(40);
    for (unsigned n : {40u, 50u, 60u}) {
        BigReal lg_bound = log10(series_error_bound(n, ctx));
        BigReal gap = abs(lg_bound - series_error_asymptote(n, ctx));
        CHECK(gap < br("0.75", ctx));
    }
    // and the asymptote itself keeps falling at the 2 lg 2 rate
    BigReal drop = series_error_asymptote(41, ctx) - series_error_asymptote(40, ctx);
    CHECK(within(drop, br("-0.634", ctx), br("0.02", ctx)));
}

}  // TEST_SUITE reference_methods
