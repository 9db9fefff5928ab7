#include "oddzeta/quadrature.hpp"

#include <vector>

namespace oddzeta {

BigReal integrate_01(const Integrand& f, const PrecisionContext& ctx,
                     const EndpointLimits& limits, int max_levels) {
    // carry extra digits internally so the stopping test is not limited
    // by the caller's working precision
    const PrecisionContext work(ctx.digits() + 10, ctx.guard() + 10);
    const BigReal tolerance = pow10(-(ctx.digits() + 2), work);

    const BigReal f0 = limits.at_zero ? limits.at_zero->round_to(work)
                                      : f(BigReal(0L, work));
    const BigReal f1 = limits.at_one ? limits.at_one->round_to(work)
                                     : f(BigReal(1L, work));

    std::vector<std::vector<BigReal>> table;
    table.push_back({(f0 + f1) / 2});

    for (int level = 1; level <= max_levels; ++level) {
        // refine the trapezoid sum with the new midpoints
        const long new_points = 1L << (level - 1);
        BigReal h = pow2(-level, work);
        BigReal acc(work);
        for (long i = 0; i < new_points; ++i) {
            acc = acc + f(BigReal(2 * i + 1, work) * h);
        }
        std::vector<BigReal> row;
        row.reserve(level + 1);
        row.push_back(table[level - 1][0] / 2 + acc * h);
        for (int j = 1; j <= level; ++j) {
            const BigReal& fine = row[j - 1];
            const BigReal& coarse = table[level - 1][j - 1];
            row.push_back(fine + (fine - coarse) / ((1L << (2 * j)) - 1));
        }
        table.push_back(std::move(row));

        if (level >= 4) {
            const BigReal& current = table[level][level];
            const BigReal& previous = table[level - 1][level - 1];
            if (abs(current - previous) < tolerance) {
                return current.round_to(ctx);
            }
        }
    }

    BigReal last = table[max_levels][max_levels];
    BigReal previous = table[max_levels - 1][max_levels - 1];
    throw QuadratureFailure("integrate_01: no convergence after " +
                                std::to_string(max_levels) + " refinement levels",
                            std::move(last), std::move(previous));
}

}  // namespace oddzeta
