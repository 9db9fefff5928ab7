#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "oddzeta/big_real.hpp"
#include "oddzeta/precision.hpp"

namespace oddzeta {

/// Raised when the refinement ladder runs out of levels before two
/// successive estimates agree; carries the last two estimates.
class QuadratureFailure : public std::runtime_error {
public:
    QuadratureFailure(const std::string& message, BigReal last, BigReal previous)
        : std::runtime_error(message),
          last_estimate(std::move(last)),
          previous_estimate(std::move(previous)) {}

    BigReal last_estimate;
    BigReal previous_estimate;
};

/// Values a caller supplies for integrands whose raw formula is 0/0 at an
/// endpoint; when absent the integrand itself is evaluated there.
struct EndpointLimits {
    std::optional<BigReal> at_zero;
    std::optional<BigReal> at_one;
};

using Integrand = std::function<BigReal(const BigReal&)>;

/// ∫₀¹ f(x) dx by iterated Richardson refinement of the trapezoid rule
/// (Romberg), doubling the mesh until two successive diagonal estimates
/// agree to 10^(−P−2). Absolute error ≤ 10^(−P) for integrands analytic
/// on (0,1) with finite one-sided endpoint limits.
BigReal integrate_01(const Integrand& f, const PrecisionContext& ctx,
                     const EndpointLimits& limits = {}, int max_levels = 24);

}  // namespace oddzeta
