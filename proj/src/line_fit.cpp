#include "oddzeta/line_fit.hpp"

#include <stdexcept>

namespace oddzeta {

FitResult fit_line(std::span<const std::pair<BigReal, BigReal>> points) {
    if (points.size() < 2)
        throw std::invalid_argument("fit_line: need at least 2 points");

    PrecisionContext ctx = points[0].first.context();
    for (const auto& [x, y] : points) {
        if (x.context().bits() > ctx.bits()) ctx = x.context();
        if (y.context().bits() > ctx.bits()) ctx = y.context();
    }

    bool distinct = false;
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i].first == points[0].first)) {
            distinct = true;
            break;
        }
    }
    if (!distinct)
        throw std::invalid_argument("fit_line: need at least 2 distinct abscissae");

    const long n = static_cast<long>(points.size());
    BigReal sx(ctx), sy(ctx), sxx(ctx), sxy(ctx);
    for (const auto& [x, y] : points) {
        sx = sx + x;
        sy = sy + y;
        sxx = sxx + x * x;
        sxy = sxy + x * y;
    }

    // normal equations of the two-parameter model
    BigReal denom = sxx * n - sx * sx;
    BigReal slope = (sxy * n - sx * sy) / denom;
    BigReal intercept = (sy - slope * sx) / n;

    BigReal max_residual(ctx);
    for (const auto& [x, y] : points) {
        BigReal r = abs(y - (slope * x + intercept));
        if (r > max_residual) max_residual = r;
    }

    return FitResult{std::move(slope), std::move(intercept), std::move(max_residual)};
}

}  // namespace oddzeta
