#include "oracles.hpp"

#include <vector>

namespace oddzeta::oracle {

Rational bernoulli_explicit(unsigned n) {
    mpq_class sum = 0;
    for (unsigned k = 0; k <= n; ++k) {
        mpz_class inner = 0;
        for (unsigned j = 0; j <= k; ++j) {
            mpz_class c;
            mpz_bin_uiui(c.get_mpz_t(), k, j);
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), j, n);
            if (j % 2 == 1) inner -= c * p;
            else inner += c * p;
        }
        sum += mpq_class(inner) / mpq_class(k + 1);
    }
    return Rational::from_raw(std::move(sum));
}

BigReal zeta_direct_sum(long s, unsigned terms, const PrecisionContext& ctx) {
    BigReal sum(ctx);
    for (unsigned k = 1; k <= terms; ++k) {
        sum = sum + pow(BigReal(static_cast<long>(k), ctx), -s);
    }
    return sum;
}

std::pair<BigReal, BigReal> eta_partial_sum_bracket(long s, unsigned m,
                                                    const PrecisionContext& ctx) {
    BigReal sum(ctx);
    for (unsigned k = 1; k <= 2 * m; ++k) {
        BigReal term = pow(BigReal(static_cast<long>(k), ctx), -s);
        sum = (k % 2 == 1) ? sum + term : sum - term;
    }
    BigReal lower = sum;  // even partial sum undershoots
    BigReal upper = sum + pow(BigReal(static_cast<long>(2 * m + 1), ctx), -s);
    return {std::move(lower), std::move(upper)};
}

std::uint64_t sfree_count_sieve(std::uint64_t x, unsigned s) {
    std::vector<bool> blocked(x + 1, false);
    for (std::uint64_t base = 2;; ++base) {
        // p = base^s; everything divisible by any perfect s-th power > 1 is not s-free
        std::uint64_t p = 1;
        bool overflow = false;
        for (unsigned i = 0; i < s; ++i) {
            if (p > x / base) {
                overflow = true;
                break;
            }
            p *= base;
        }
        if (overflow || p > x) break;
        for (std::uint64_t multiple = p; multiple <= x; multiple += p) blocked[multiple] = true;
    }
    std::uint64_t count = 0;
    for (std::uint64_t i = 1; i <= x; ++i)
        if (!blocked[i]) ++count;
    return count;
}

Rational gamma_integer(unsigned s) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), s - 1);
    return Rational::from_raw(mpq_class(f));
}

Rational polynomial_integral_01(const std::vector<Rational>& descending_coefficients) {
    // sum coeff_of_x^d / (d+1)
    Rational sum(0);
    const std::size_t n = descending_coefficients.size();
    for (std::size_t i = 0; i < n; ++i) {
        const long degree = static_cast<long>(n - 1 - i);
        sum += descending_coefficients[i] / Rational(degree + 1);
    }
    return sum;
}

Rational even_moment_sqrt_pi_multiplier(unsigned j) {
    // (2j-1)!! / 2^j
    mpz_class dfac = 1;
    for (unsigned i = 1; i + 1 <= 2 * j; i += 2) dfac *= i;
    mpq_class q(dfac);
    q /= (mpz_class(1) << j);
    return Rational::from_raw(std::move(q));
}

}  // namespace oddzeta::oracle
