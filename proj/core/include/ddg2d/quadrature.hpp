#pragma once

#include "ddg2d/geometry.hpp"

#include <vector>

namespace ddg2d {

/// Quadrature rule on the reference triangle {(r,s): r,s >= 0, r+s <= 1}
/// (kind = volume) or the unit interval [0,1] (kind = edge; only point.x
/// is meaningful). Weights are strictly positive and sum to the reference
/// measure (1/2 for the triangle, 1 for the interval).
struct QuadratureRule {
    enum class Kind { volume, edge };

    Kind kind = Kind::volume;
    int exactness = 0;
    std::vector<Vec2> points;
    std::vector<double> weights;

    int size() const { return static_cast<int>(points.size()); }
};

/// Collapsed tensor-product Gauss(-Jacobi) rule on the reference triangle,
/// exact for all polynomials of total degree <= exactness. All weights
/// positive by construction.
QuadratureRule volume_rule(int exactness);

/// Gauss-Legendre rule on [0,1], exact up to degree <= exactness.
QuadratureRule edge_rule(int exactness);

/// Minimum weight of a volume rule after normalizing the weights to sum
/// to one. Enters the CFL condition.
double min_volume_weight(const QuadratureRule& rule);

/// The n x n collapsed tensor Gauss point set on the reference triangle,
/// used as a dense per-element sample set (19 x 19 = 361 points for the
/// max-norm error).
std::vector<Vec2> collapsed_sample_points(int n_per_direction);

} // namespace ddg2d
