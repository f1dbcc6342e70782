#pragma once

#include "ddg2d/discretization.hpp"
#include "ddg2d/field.hpp"

#include <limits>
#include <vector>

namespace ddg2d {

/// Bounds for the linear scaling limiter. Either side may be infinite
/// (positivity-only limiting uses lower = 0, upper = +inf).
struct LimiterConfig {
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
};

struct LimiterReport {
    /// Elements whose cell average already violates the bounds; those
    /// cannot be repaired by scaling and signal a CFL or scheme failure
    /// upstream (they are left untouched).
    std::vector<int> average_violations;

    bool ok() const { return average_violations.empty(); }
};

/// Linear scaling limiter: per element, u <- ubar + theta (u - ubar) with
/// the smallest theta in [0,1] that brings every sample-point value inside
/// [lower, upper]. Cell averages are preserved exactly (the mean mode is
/// never touched). The sample set is the union of volume quadrature
/// points, edge quadrature points on all three edges, and the vertices.
LimiterReport apply_scaling_limiter(const Discretization& disc, DGField& u,
                                    const LimiterConfig& config);

} // namespace ddg2d
