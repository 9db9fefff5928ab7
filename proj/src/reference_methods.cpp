#include "oddzeta/reference_methods.hpp"

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>

namespace oddzeta {

namespace {

// H_N and H_{N-1} together, three-term recurrence
void hermite_pair(unsigned order, const BigReal& x, BigReal& h_n, BigReal& h_nm1) {
    const PrecisionContext& ctx = x.context();
    BigReal p0(1L, ctx);
    BigReal p1 = x * 2L;
    if (order == 0) {
        h_n = p0;
        h_nm1 = BigReal(ctx);
        return;
    }
    for (unsigned k = 1; k < order; ++k) {
        BigReal p2 = x * p1 * 2L - p0 * static_cast<long>(2 * k);
        p0 = std::move(p1);
        p1 = std::move(p2);
    }
    h_n = std::move(p1);
    h_nm1 = std::move(p0);
}

BigReal stable_weight(unsigned order, const BigReal& h_nm1_at_node,
                      const PrecisionContext& ctx) {
    // 2^(N-1) N! sqrt(pi) / (N^2 H_{N-1}(x)^2)
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), order);
    BigReal w = BigReal(Rational::from_raw(mpq_class(f)), ctx) * sqrt(pi(ctx));
    w = w * pow2(static_cast<long>(order) - 1, ctx);
    return w / (h_nm1_at_node * h_nm1_at_node * static_cast<long>(order * order));
}

}  // namespace

BigReal hermite_polynomial(unsigned order, const BigReal& x) {
    BigReal h_n(x.context()), h_nm1(x.context());
    hermite_pair(order, x, h_n, h_nm1);
    return h_n;
}

HermiteRule hermite_rule(unsigned order, const PrecisionContext& ctx) {
    if (order < 1) throw std::invalid_argument("hermite_rule: order must be positive");
    const PrecisionContext work(ctx.digits() + 10, ctx.guard() + 10);

    // all roots are real and simple and the positive ones lie in
    // (0, sqrt(2N+1)); interlacing guarantees the bracket grid finds them
    auto h_double = [order](double x) {
        double p0 = 1.0, p1 = 2.0 * x;
        if (order == 0) return p0;
        for (unsigned k = 1; k < order; ++k) {
            double p2 = 2.0 * x * p1 - 2.0 * k * p0;
            p0 = p1;
            p1 = p2;
        }
        return p1;
    };
    const double upper = std::sqrt(2.0 * order + 1.0) + 1.0;
    const double lower = 1e-9;  // skip the origin; an odd-order zero node is added explicitly
    const int grid = 400 > 16 * static_cast<int>(order) ? 400 : 16 * static_cast<int>(order);
    std::vector<double> seeds;
    double prev_x = lower, prev_h = h_double(lower);
    for (int i = 1; i <= grid; ++i) {
        double x = lower + (upper - lower) * i / grid;
        double h = h_double(x);
        if ((prev_h < 0) != (h < 0)) seeds.push_back((prev_x + x) / 2);
        prev_x = x;
        prev_h = h;
    }
    if (seeds.size() != order / 2)
        throw std::runtime_error("hermite_rule: bracket scan found " +
                                 std::to_string(seeds.size()) + " positive roots, expected " +
                                 std::to_string(order / 2));

    const BigReal step_tolerance = pow2(-static_cast<long>(work.bits() - 8), work);
    std::vector<BigReal> positive_nodes;
    std::vector<BigReal> positive_weights;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        BigReal x(seeds[i], work);
        BigReal h_n(work), h_nm1(work);
        bool converged = false;
        for (int iteration = 0; iteration < 200; ++iteration) {
            hermite_pair(order, x, h_n, h_nm1);
            // H_N' = 2N H_{N-1}
            BigReal stepv = h_n / (h_nm1 * static_cast<long>(2 * order));
            x = x - stepv;
            if (abs(stepv) < step_tolerance * abs(x)) {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw std::runtime_error("hermite_rule: node " + std::to_string(i) +
                                     " failed to converge");
        hermite_pair(order, x, h_n, h_nm1);
        positive_nodes.push_back(std::move(x));
        positive_weights.push_back(stable_weight(order, h_nm1, work));
    }

    HermiteRule rule;
    rule.order = order;
    rule.nodes.reserve(order);
    rule.weights.reserve(order);
    for (std::size_t i = seeds.size(); i-- > 0;) {
        rule.nodes.push_back((-positive_nodes[i]).round_to(ctx));
        rule.weights.push_back(positive_weights[i].round_to(ctx));
    }
    if (order % 2 == 1) {
        BigReal zero(work);
        BigReal h_n(work), h_nm1(work);
        hermite_pair(order, zero, h_n, h_nm1);
        rule.nodes.push_back(BigReal(ctx));
        rule.weights.push_back(stable_weight(order, h_nm1, work).round_to(ctx));
    }
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        rule.nodes.push_back(positive_nodes[i].round_to(ctx));
        rule.weights.push_back(positive_weights[i].round_to(ctx));
    }
    return rule;
}

ZetaValue zeta_integral_method(const BigReal& s, unsigned nodes, const PrecisionContext& ctx) {
    return zeta_integral_method(s, hermite_rule(nodes, ctx), ctx);
}

ZetaValue zeta_integral_method(const BigReal& s, const HermiteRule& rule,
                               const PrecisionContext& ctx) {
    if (!(s.to_double() >= 2.0))
        throw std::domain_error("zeta_integral_method: requires s >= 2");
    const PrecisionContext work(ctx.digits() + 10, ctx.guard() + 10);
    const BigReal sw = s.round_to(work);
    const BigReal power = sw * 2L - 1L;
    BigReal numerator(work), denominator(work);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const BigReal x = rule.nodes[i].round_to(work);
        if (x.is_zero()) continue;  // the integrands vanish at 0 for s >= 2
        const BigReal w = rule.weights[i].round_to(work);
        const BigReal f_den = pow(abs(x), power);
        denominator = denominator + w * f_den;
        const BigReal g = 1L - exp(-(x * x));
        numerator = numerator + w * (f_den / g);
    }
    BigReal value = (numerator / denominator).round_to(ctx);
    return ZetaValue{s.round_to(ctx), std::move(value), Method::integral, ctx.digits()};
}

ZetaValue zeta_series_method(unsigned n, unsigned terms, const PrecisionContext& ctx,
                             SeriesState& state) {
    if (n < 1) throw std::invalid_argument("zeta_series_method: n must be positive");
    for (unsigned m = 1; m < n; ++m) {
        if (!state.known_odd.contains(m))
            throw std::invalid_argument("zeta_series_method: state is missing zeta(" +
                                        std::to_string(2 * m + 1) + ")");
    }
    const PrecisionContext work(ctx.digits() + 10, ctx.guard() + 10);
    const BigReal two_pi = pi(work) * 2L;

    // prefactor (−1)^(n−1)·(2π)^(2n)/((2n)!·[2^(2n)(2n−3)−2n+1])
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), 2 * n);
    mpz_class bracket = mpz_class(1) << (2 * n);
    bracket *= 2 * static_cast<long>(n) - 3;
    bracket -= 2 * static_cast<long>(n);
    bracket += 1;
    BigReal prefactor = pow(two_pi, static_cast<long>(2 * n)) /
                        BigReal(Rational::from_raw(mpq_class(fact * bracket)), work);
    if (n % 2 == 0) prefactor = -prefactor;

    // finite sum over the lower odd values
    BigReal finite(work);
    for (unsigned m = 1; m < n; ++m) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), 2 * n - 1, 2 * m - 2);
        mpz_class fm;
        mpz_fac_ui(fm.get_mpz_t(), 2 * m);
        mpz_class p = (mpz_class(1) << (2 * m)) - 1;
        BigReal term = BigReal(Rational::from_raw(mpq_class(c * fm * p)), work) /
                       pow(two_pi, static_cast<long>(2 * m));
        term = term * state.known_odd.at(m).round_to(work);
        if (m % 2 == 1) term = -term;
        finite = finite + term;
    }

    // 2·Σ_{k=0}^{N₂} ζ(2k)/((2k+2n−1)(k+n)(2k+2n+1)·4^k), ζ(0) = −1/2
    BigReal tail(work);
    for (unsigned k = 0; k <= terms; ++k) {
        BigReal zeta_2k = (k == 0) ? BigReal(Rational(-1, 2), work)
                                   : zeta_even(k, work).value;
        mpz_class d = mpz_class(2 * k + 2 * n - 1) * (k + n) * (2 * k + 2 * n + 1);
        d <<= 2 * k;
        tail = tail + zeta_2k / BigReal(Rational::from_raw(mpq_class(d)), work);
    }
    tail = tail * 2L;

    BigReal value = (prefactor * (finite + tail)).round_to(ctx);
    state.known_odd.insert_or_assign(n, value);
    state.terms = terms;
    return ZetaValue{BigReal(2L * n + 1, ctx), std::move(value), Method::series, ctx.digits()};
}

BigReal series_error_bound(unsigned terms, const PrecisionContext& ctx) {
    if (terms < 1) throw std::invalid_argument("series_error_bound: N must be positive");
    const long N = terms;
    BigReal pi2 = pi(ctx) * pi(ctx);
    BigReal denom = BigReal((2 * N + 3) * (N + 2) * (2 * N + 5), ctx) *
                    (pow2(2 * N, ctx) - BigReal(Rational(1, 2), ctx));
    return pi2 * 4L / 45L / denom;
}

BigReal series_error_asymptote(unsigned terms, const PrecisionContext& ctx) {
    if (terms < 1) throw std::invalid_argument("series_error_asymptote: N must be positive");
    const long N = terms;
    BigReal lg2 = log10(BigReal(2L, ctx));
    BigReal lgN = log10(BigReal(N, ctx));
    return -(lg2 * (2 * (N + 1))) - lgN * 3L;
}

}  // namespace oddzeta
