#pragma once

#include <span>
#include <utility>

#include "oddzeta/big_real.hpp"

namespace oddzeta {

/// Least-squares line y = slope·x + intercept; residuals are reported,
/// never hidden.
struct FitResult {
    BigReal slope;
    BigReal intercept;
    BigReal max_abs_residual;
};

/// Fits the line minimizing summed squared ordinate residuals.
/// Requires at least two points with at least two distinct abscissae;
/// anything less throws std::invalid_argument.
FitResult fit_line(std::span<const std::pair<BigReal, BigReal>> points);

}  // namespace oddzeta
