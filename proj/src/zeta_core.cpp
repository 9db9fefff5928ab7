#include "oddzeta/zeta_core.hpp"

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>

#include "oddzeta/bernoulli.hpp"

namespace oddzeta {

namespace {

constexpr long kEulerMaclaurinCap = 10'000'000;

void require_domain(const BigReal& s, double min_value, const char* where) {
    if (!(s.to_double() >= min_value))
        throw std::domain_error(std::string(where) + ": argument below supported domain");
}

BigReal eta_factor(const BigReal& s) {
    // 1 - 2^(1-s)
    const PrecisionContext& ctx = s.context();
    BigReal two(2L, ctx);
    return 1L - pow(two, 1L - s);
}

}  // namespace

std::string_view method_name(Method m) {
    switch (m) {
        case Method::exact_even: return "exact-even";
        case Method::reference: return "reference";
        case Method::geomean: return "geomean";
        case Method::bounds_l: return "bounds-l";
        case Method::bounds_r: return "bounds-r";
        case Method::asymptotic: return "asymptotic";
        case Method::integral: return "integral";
        case Method::series: return "series";
    }
    return "unknown";
}

std::optional<Method> method_from_name(std::string_view name) {
    if (name == "exact-even") return Method::exact_even;
    if (name == "reference") return Method::reference;
    if (name == "geomean") return Method::geomean;
    if (name == "bounds-l") return Method::bounds_l;
    if (name == "bounds-r") return Method::bounds_r;
    if (name == "asymptotic") return Method::asymptotic;
    if (name == "integral") return Method::integral;
    if (name == "series") return Method::series;
    return std::nullopt;
}

ZetaValue zeta_even(unsigned n, const PrecisionContext& ctx, unsigned exact_threshold) {
    if (n < 1) throw std::invalid_argument("zeta_even: n must be positive");
    BigReal argument(2L * n, ctx);
    if (n <= exact_threshold) {
        mpq_class q = bernoulli_number(2 * n).raw();
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), 2 * n);
        q /= mpz_class(2 * f);
        if (n % 2 == 0) q = -q;
        BigReal value = BigReal(Rational::from_raw(std::move(q)), ctx) *
                        pow(pi(ctx) * 2L, static_cast<long>(2 * n));
        return ZetaValue{std::move(argument), std::move(value), Method::exact_even, ctx.digits()};
    }
    // direct sum: the tail after K terms is below (K+1)^(-2n); with
    // 2n > 1024 a handful of terms reaches any desk-scale precision
    const double s = 2.0 * n;
    const double need = (ctx.digits() + ctx.guard() + 2) * std::log(10.0);
    BigReal sum(1L, ctx);
    for (long k = 2;; ++k) {
        if (s * std::log(static_cast<double>(k)) > need) break;
        sum = sum + pow(BigReal(k, ctx), -static_cast<long>(2 * n));
    }
    return ZetaValue{std::move(argument), std::move(sum), Method::exact_even, ctx.digits()};
}

BigReal eta_from_zeta(const BigReal& s, const BigReal& zeta) {
    if (!(s.to_double() > 1.0))
        throw std::domain_error("eta_from_zeta: requires s > 1");
    return eta_factor(s) * zeta;
}

BigReal zeta_from_eta(const BigReal& s, const BigReal& eta) {
    if (!(s.to_double() > 1.0))
        throw std::domain_error("zeta_from_eta: requires s > 1");
    return eta / eta_factor(s);
}

BigReal rho_from_zeta(const BigReal& s, const BigReal& zeta) {
    return 1L / eta_from_zeta(s, zeta) - 1L;
}

BigReal zeta_from_rho(const BigReal& s, const BigReal& rho) {
    if (!(s.to_double() > 1.0))
        throw std::domain_error("zeta_from_rho: requires s > 1");
    return 1L / ((rho + 1L) * eta_factor(s));
}

BigReal rho(const BigReal& s, const PrecisionContext& ctx) {
    require_domain(s, 2.0, "rho");
    if (mpfr_integer_p(s.raw())) {
        long si = mpfr_get_si(s.raw(), MPFR_RNDN);
        if (si % 2 == 0) {
            return rho_from_zeta(s, zeta_even(static_cast<unsigned>(si / 2), ctx).value);
        }
    }
    return rho_from_zeta(s, zeta_reference(s, ctx).value);
}

ZetaValue zeta_reference(const BigReal& s, const PrecisionContext& ctx) {
    require_domain(s, 2.0, "zeta_reference");
    const PrecisionContext work(ctx.digits() + 10, ctx.guard() + 10);
    const long target = ctx.digits();
    const BigReal sw = s.round_to(work);
    const BigReal tolerance = pow10(-(target + 5), work);
    const double sd = s.to_double();

    // initial K: smallest K with K^(-s) < 10^(-P-5) when cheap, otherwise
    // the Euler-Maclaurin sweet spot ~ 0.3665*(P+5)
    long K;
    {
        double direct = std::pow(10.0, (target + 6) / sd);
        double em = 0.3665 * (target + 6) + 4;
        K = static_cast<long>(std::ceil(std::min(std::max(direct, 4.0), std::max(em, 8.0))));
    }

    while (K <= kEulerMaclaurinCap) {
        BigReal sum(work);
        for (long k = 1; k <= K; ++k) {
            sum = sum + pow(BigReal(k, work), -sw);
        }
        const BigReal Kr(K, work);
        sum = sum + pow(Kr, 1L - sw) / (sw - 1L);
        const BigReal K_pow_neg_s = pow(Kr, -sw);
        sum = sum - K_pow_neg_s / 2L;

        // correction terms: B_2j/(2j)! * s(s+1)...(s+2j-2) * K^(1-s-2j)
        BigReal rising = sw;
        BigReal k_factor = K_pow_neg_s / Kr;
        mpz_class fact = 2;
        BigReal previous_mag(work);
        mpfr_set_inf(previous_mag.raw(), 1);
        bool converged = false;
        for (long j = 1;; ++j) {
            if (j > 1) {
                rising = rising * (sw + (2 * j - 3)) * (sw + (2 * j - 2));
                k_factor = k_factor / (Kr * Kr);
                fact *= static_cast<unsigned long>(2 * j) * static_cast<unsigned long>(2 * j - 1);
            }
            mpq_class coeff = bernoulli_number(static_cast<std::size_t>(2 * j)).raw();
            coeff /= fact;
            BigReal term = BigReal(Rational::from_raw(std::move(coeff)), work) * rising * k_factor;
            BigReal magnitude = abs(term);
            if (magnitude < tolerance) {
                converged = true;  // first omitted term already negligible
                break;
            }
            if (magnitude > previous_mag) break;  // asymptotic tail diverging: K too small
            sum = sum + term;
            previous_mag = std::move(magnitude);
        }
        if (converged) {
            return ZetaValue{s.round_to(ctx), sum.round_to(ctx), Method::reference, target};
        }
        K *= 2;
    }
    throw std::runtime_error("zeta_reference: cannot meet tolerance within the K cap");
}

FractionalSums fractional_sums(unsigned max_n, const PrecisionContext& ctx) {
    if (max_n < 2) throw std::invalid_argument("fractional_sums: max_n must be at least 2");
    BigReal all(ctx), even(ctx), odd(ctx);
    for (unsigned n = 2; n <= max_n; ++n) {
        BigReal z = (n % 2 == 0) ? zeta_even(n / 2, ctx).value
                                 : zeta_reference(BigReal(static_cast<long>(n), ctx), ctx).value;
        BigReal frac = z - 1L;
        all = all + frac;
        if (n % 2 == 0) even = even + frac;
        else odd = odd + frac;
    }
    return FractionalSums{std::move(all), std::move(even), std::move(odd)};
}

}  // namespace oddzeta
