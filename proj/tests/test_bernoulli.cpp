#include <doctest.h>

#include <optional>
#include <thread>

#include "oddzeta/bernoulli.hpp"
#include "oddzeta/quadrature.hpp"
#include "oddzeta/zeta_core.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace oddzeta;
using oddzeta::testing::br;
using oddzeta::testing::within;
using oddzeta::testing::within_pow10;

TEST_SUITE("bernoulli") {

TEST_CASE("base values and the B_1 = -1/2 convention") {
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == Rational(-1, 2));
    CHECK(bernoulli_number(2) == Rational(1, 6));
    CHECK(bernoulli_number(4) == Rational(-1, 30));
    CHECK(bernoulli_number(12) == Rational::from_string("-691/2730"));
}

TEST_CASE("odd entries vanish, even entries alternate in sign") {
    for (unsigned k = 1; k <= 15; ++k) CHECK(bernoulli_number(2 * k + 1).is_zero());
    for (unsigned k = 1; k <= 20; ++k) {
        int expected = (k % 2 == 1) ? 1 : -1;  // (-1)^(k+1)
        CHECK(bernoulli_number(2 * k).sign() == expected);
    }
}

TEST_CASE("recurrence agrees with the explicit-formula oracle") {
    for (unsigned n = 0; n <= 24; ++n) {
        CHECK(bernoulli_number(n) == oracle::bernoulli_explicit(n));
    }
}

TEST_CASE("polynomial coefficients for low degrees") {
    BernoulliPolynomial b0(0);
    CHECK(b0.coefficients() == std::vector<Rational>{Rational(1)});

    BernoulliPolynomial b2(2);  // t^2 - t + 1/6
    CHECK(b2.coefficients() ==
          std::vector<Rational>{Rational(1), Rational(-1), Rational(1, 6)});

    BernoulliPolynomial b3(3);  // t^3 - (3/2) t^2 + (1/2) t
    CHECK(b3.coefficients() == std::vector<Rational>{Rational(1), Rational(-3, 2),
                                                     Rational(1, 2), Rational(0)});
}

TEST_CASE("derivative rule B_n' = n B_{n-1} holds coefficient-wise") {
    for (unsigned n = 1; n <= 12; ++n) {
        BernoulliPolynomial d = BernoulliPolynomial(n).derivative();
        BernoulliPolynomial lower(n - 1);
        REQUIRE(d.degree() == lower.degree());
        for (std::size_t j = 0; j < d.coefficients().size(); ++j) {
            CHECK(d.coefficients()[j] ==
                  lower.coefficients()[j] * Rational(static_cast<long>(n)));
        }
    }
}

TEST_CASE("endpoint values: B_n(0) = B_n; odd n >= 3 vanish at both ends") {
    for (unsigned n = 0; n <= 13; ++n) {
        BernoulliPolynomial p(n);
        CHECK(p(Rational(0)) == bernoulli_number(n));
        if (n >= 3 && n % 2 == 1) {
            CHECK(p(Rational(0)).is_zero());
            CHECK(p(Rational(1)).is_zero());
        }
    }
}

TEST_CASE("exact rational evaluation") {
    BernoulliPolynomial b2(2);
    CHECK(b2(Rational(1, 2)) == Rational(-1, 12));  // B_2(1/2) = 1/4 - 1/2 + 1/6
    PrecisionContext ctx(40);
    BigReal at_half = b2(BigReal(Rational(1, 2), ctx));
    CHECK(within_pow10(at_half, BigReal(Rational(-1, 12), ctx), -38));
}

TEST_CASE("rbn_plus values and positivity") {
    CHECK(rbn_plus(1) == Rational(1, 6));
    CHECK(rbn_plus(2) == Rational(1, 30));
    for (unsigned n = 1; n <= 40; ++n) CHECK(rbn_plus(n).sign() == 1);
}

TEST_CASE("rbn_plus asymptotics: scaled value equals zeta(2n) -> 1") {
    PrecisionContext ctx(40);
    // (2pi)^{2n}/(2(2n)!) * rbn_plus(n) = zeta(2n), assertable via zeta_even
    for (unsigned n : {1u, 2u, 5u, 10u, 20u}) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), 2 * n);
        BigReal scale = pow(pi(ctx) * 2L, static_cast<long>(2 * n)) /
                        BigReal(Rational::from_raw(mpq_class(2 * f)), ctx);
        BigReal scaled = scale * BigReal(rbn_plus(n), ctx);
        CHECK(within_pow10(scaled, zeta_even(n, ctx).value, -(ctx.digits() - 3)));
    }
    // and the scaled value approaches 1 from above
    BigReal scaled_30 = [&] {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), 60);
        return pow(pi(ctx) * 2L, 60L) /
               BigReal(Rational::from_raw(mpq_class(2 * f)), ctx) *
               BigReal(rbn_plus(30), ctx);
    }();
    CHECK(scaled_30 > 1L);
    CHECK(scaled_30 - 1L < pow10(-17, ctx));
}

TEST_CASE("rbn_minus against the closed identity with reference zeta") {
    PrecisionContext ctx(40);
    // rbn_minus(n) = 2(2n+1)!/(2pi)^{2n+1} * zeta(2n+1)
    for (unsigned n : {1u, 2u}) {
        BigReal measured = rbn_minus(n, ctx);
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), 2 * n + 1);
        BigReal expected = BigReal(Rational::from_raw(mpq_class(2 * f)), ctx) /
                           pow(pi(ctx) * 2L, static_cast<long>(2 * n + 1)) *
                           zeta_reference(BigReal(2L * n + 1, ctx), ctx).value;
        CHECK(within_pow10(measured, expected, -(ctx.digits() - 2)));
    }
    CHECK(within(rbn_minus(1, ctx), br("0.05815227", ctx), br("1e-8", ctx)));
    CHECK(within(rbn_minus(2, ctx), br("0.02541326114", ctx), br("1e-9", ctx)));
}

TEST_CASE("integrate_01 of B_3(x) cot(pi x) equals 2*3!/(2pi)^3 * zeta(3)") {
    PrecisionContext ctx(40);
    BernoulliPolynomial b3(3);
    BigReal pi_value = pi(ctx);
    BigReal limit = BigReal(Rational(1, 2), ctx) / pi_value;  // 3*B_2/pi = 1/(2pi)
    Integrand f = [&](const BigReal& x) { return b3(x) * cot(pi_value * x); };
    BigReal v = integrate_01(f, ctx, EndpointLimits{limit, limit});
    BigReal expected = BigReal(12L, ctx) / pow(pi_value * 2L, 3L) *
                       zeta_reference(BigReal(3L, ctx), ctx).value;
    CHECK(within_pow10(v, expected, -38));
    CHECK(within(v, br("0.0581522", ctx), br("1e-7", ctx)));
}

TEST_CASE("rbn_minus asymptotics: scaled value -> 1") {
    PrecisionContext ctx(30);
    BigReal previous_gap(ctx);
    for (unsigned n : {2u, 4u, 8u}) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), 2 * n + 1);
        BigReal scaled = pow(pi(ctx) * 2L, static_cast<long>(2 * n + 1)) /
                         BigReal(Rational::from_raw(mpq_class(2 * f)), ctx) *
                         rbn_minus(n, ctx);
        BigReal gap = abs(scaled - 1L);
        CHECK(gap < pow10(-1, ctx));
        if (n > 2) CHECK(gap < previous_gap);
        previous_gap = gap;
    }
}

TEST_CASE("aux integrals: odd m vanish, even m closed forms") {
    CHECK(aux_integral_cos(1, 1) == PiPower{Rational(0), 0});
    CHECK(aux_integral_cos(1, 3) == PiPower{Rational(0), 0});
    CHECK(aux_integral_sin(1, 1) == PiPower{Rational(0), 0});
    CHECK(aux_integral_cos(1, 2) == PiPower{Rational(1, 2), -2});    // 2!/(2pi)^2
    CHECK(aux_integral_cos(2, 2) == PiPower{Rational(-3, 2), -4});   // -24/(2pi)^4
    CHECK(aux_integral_sin(1, 2) == PiPower{Rational(3, 4), -3});    // 3!/(2pi)^3
    CHECK(aux_integral_sin(2, 2) == PiPower{Rational(-15, 4), -5});  // -5!/(2pi)^5
}

TEST_CASE("aux recursions hold exactly in the (rational, pi-power) form") {
    for (unsigned m : {2u, 4u}) {
        for (unsigned n = 2; n <= 6; ++n) {
            // I_c(n,m) = -(2n)(2n-1)/(m pi)^2 * I_c(n-1,m)
            PiPower lhs = aux_integral_cos(n, m);
            PiPower prev = aux_integral_cos(n - 1, m);
            Rational factor = -Rational(static_cast<long>(2 * n) * (2 * n - 1),
                                        static_cast<long>(m) * m);
            CHECK(lhs.coefficient == factor * prev.coefficient);
            CHECK(lhs.exponent == prev.exponent - 2);

            PiPower lhs_s = aux_integral_sin(n, m);
            PiPower prev_s = aux_integral_sin(n - 1, m);
            Rational factor_s = -Rational(static_cast<long>(2 * n + 1) * (2 * n),
                                          static_cast<long>(m) * m);
            CHECK(lhs_s.coefficient == factor_s * prev_s.coefficient);
            CHECK(lhs_s.exponent == prev_s.exponent - 2);
        }
    }
}

TEST_CASE("odd-m aux integrals vanish, confirmed by quadrature") {
    PrecisionContext ctx(40);
    BigReal pi_value = pi(ctx);
    // B_{2n}(t) is symmetric about 1/2, cos(3 pi t) antisymmetric
    BernoulliPolynomial b4(4);
    BigReal v = integrate_01(
        [&](const BigReal& x) { return b4(x) * cos(pi_value * 3L * x); }, ctx);
    CHECK(abs(v) < pow10(-(ctx.digits() - 3), ctx));
    CHECK(aux_integral_cos(2, 3) == PiPower{Rational(0), 0});

    BernoulliPolynomial b5(5);
    BigReal w = integrate_01(
        [&](const BigReal& x) { return b5(x) * sin(pi_value * 3L * x); }, ctx);
    CHECK(abs(w) < pow10(-(ctx.digits() - 3), ctx));
    CHECK(aux_integral_sin(2, 3) == PiPower{Rational(0), 0});
}

TEST_CASE("aux closed forms match quadrature for n = 1..5") {
    PrecisionContext ctx(40);
    BigReal pi_value = pi(ctx);
    for (unsigned n = 1; n <= 5; ++n) {
        BernoulliPolynomial even_poly(2 * n);
        Integrand fc = [&](const BigReal& x) {
            return even_poly(x) * cos(pi_value * 2L * x);
        };
        BigReal by_quadrature = integrate_01(fc, ctx);
        CHECK(within_pow10(by_quadrature, aux_integral_cos(n, 2).to_real(ctx),
                           -(ctx.digits() - 3)));

        BernoulliPolynomial odd_poly(2 * n + 1);
        Integrand fs = [&](const BigReal& x) {
            return odd_poly(x) * sin(pi_value * 2L * x);
        };
        BigReal by_quadrature_s = integrate_01(fs, ctx);
        CHECK(within_pow10(by_quadrature_s, aux_integral_sin(n, 2).to_real(ctx),
                           -(ctx.digits() - 3)));
    }
}

TEST_CASE("Fourier asymptotics of the even polynomials") {
    PrecisionContext ctx(40);
    // max over x in {0, 1/4, 1/2, 3/4} of |scaled B_2n(x) - cos(2 pi x)| <= 2^(1-2n)
    for (unsigned n = 2; n <= 10; ++n) {
        BernoulliPolynomial poly(2 * n);
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), 2 * n);
        BigReal scale = pow(pi(ctx) * 2L, static_cast<long>(2 * n)) /
                        BigReal(Rational::from_raw(mpq_class(2 * f)), ctx);
        if (n % 2 == 0) scale = -scale;  // (-1)^(n+1)
        BigReal bound = pow2(1 - 2 * static_cast<long>(n), ctx);
        for (long quarter = 0; quarter <= 3; ++quarter) {
            Rational x(quarter, 4);
            BigReal lhs = scale * BigReal(poly(x), ctx);
            BigReal expected = cos(pi(ctx) * 2L * BigReal(x, ctx));
            CHECK(abs(lhs - expected) <= bound);
        }
    }
}

TEST_CASE("cache is consistent under concurrent growth") {
    // threads racing to grow the shared table must all observe the same
    // exact values, and a parallel zeta batch must match the serial one
    PrecisionContext ctx(40);
    std::vector<BigReal> serial;
    for (unsigned n = 1; n <= 40; ++n) serial.push_back(zeta_even(n, ctx).value);

    std::vector<std::optional<Rational>> seen(4);
    std::vector<std::vector<BigReal>> batches(4);
    {
        std::vector<std::thread> workers;
        for (int t = 0; t < 4; ++t) {
            workers.emplace_back([&, t] {
                seen[t] = bernoulli_number(240 + 2 * t);
                std::vector<BigReal> batch;
                for (unsigned n = 1; n <= 40; ++n) batch.push_back(zeta_even(n, ctx).value);
                batches[t] = std::move(batch);
            });
        }
        for (auto& w : workers) w.join();
    }
    for (int t = 0; t < 4; ++t) {
        REQUIRE(seen[t].has_value());
        CHECK(*seen[t] == bernoulli_number(240 + 2 * t));
        for (unsigned i = 0; i < 40; ++i) CHECK(batches[t][i] == serial[i]);
    }
}

}  // TEST_SUITE bernoulli
