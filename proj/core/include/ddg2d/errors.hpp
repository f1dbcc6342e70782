#pragma once

#include "ddg2d/discretization.hpp"
#include "ddg2d/field.hpp"

#include <functional>

namespace ddg2d {

using ExactSolution = std::function<double(double, double, double)>;

/// L2 norm of (u - exact(.,t)) via the given volume rule, accumulated
/// over elements in index order (deterministic).
double l2_error(const Discretization& disc, const DGField& u, const ExactSolution& exact,
                double t, const QuadratureRule& rule);

/// Same, with the discretization's (k+1)-point-per-direction default rule.
double l2_error(const Discretization& disc, const DGField& u, const ExactSolution& exact,
                double t);

/// Max of |u - exact(.,t)| over a fixed 361-point per-element sample set
/// (the 19 x 19 collapsed tensor point family).
double linf_error(const Discretization& disc, const DGField& u, const ExactSolution& exact,
                  double t);

/// log2(e_coarse / e_fine): the observed order between two levels of mesh
/// ratio two.
double order_between(double e_coarse, double e_fine);

} // namespace ddg2d
