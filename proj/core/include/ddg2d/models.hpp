#pragma once

#include "ddg2d/geometry.hpp"
#include "ddg2d/mesh.hpp"

#include <functional>
#include <optional>
#include <string>

namespace ddg2d {

/// One diffusion problem: the matrix A(u), its eigenvalue bounds over the
/// declared solution range, optional source and exact solution, initial
/// data, boundary treatment, and the default run parameters it was studied
/// with. Immutable value object.
struct DiffusionModel {
    std::string name;

    std::function<Mat2(double)> A;

    /// True when A does not depend on u (assembly hoists the matrix out of
    /// the quadrature loops).
    bool constant_matrix = false;

    /// Eigenvalue bounds [gamma, gamma_star] of A(u) over the declared
    /// solution range.
    double gamma = 0.0;
    double gamma_star = 0.0;

    /// sup over the solution range of the spectral norm of A(u). Bounds
    /// ||A(u)^T n|| for unit n; equals gamma_star whenever A is symmetric.
    double xi_bound = 0.0;

    /// gamma_star restricted to solution values in [lo, hi]; drives the
    /// effective diffusion scale in the CFL rule for nonlinear models.
    std::function<double(double, double)> gamma_star_on_range;

    std::function<double(double, double, double, double)> source; // (u, x, y, t)
    std::function<double(double, double, double)> exact_solution; // (x, y, t)
    std::function<double(double, double)> initial_data;           // (x, y)

    BoundaryKind boundary = BoundaryKind::periodic;
    double dirichlet_value = 0.0;

    /// Pointwise bounds [m, M] the solution must respect (limiter target);
    /// absent when no limiting is called for.
    std::optional<std::pair<double, double>> solution_bounds;

    /// Requests the 4k+1 volume/edge quadrature policy instead of 2k+1.
    bool strongly_nonlinear = false;

    /// Base diffusion constant of the equation (the mu in the CFL rule).
    double mu_ref = 0.0;

    /// Canonical domain and run parameters for this problem.
    Vec2 domain_origin;
    double domain_length = 1.0;
    double default_lambda = 0.1;
    double default_T = 1.0;

    bool has_exact() const { return static_cast<bool>(exact_solution); }
    bool has_source() const { return static_cast<bool>(source); }
};

/// Heat equation dU/dt = mu Lap(U), A = mu I, periodic on [0,1]^2, with
/// exact solution exp(-8 pi^2 mu t) cos(2 pi (x+y)).
DiffusionModel heat_model(double mu);

/// Linear anisotropic diffusion with mixed derivatives,
/// A = mu [[2,1],[2,3]], periodic on [0,1]^2, exact solution
/// exp(-32 pi^2 mu t) cos(2 pi y) cos(4 pi x - 2 pi y).
DiffusionModel anisotropic_model(double mu);

/// Same problem written with the symmetric matrix mu [[2,1.5],[1.5,3]].
DiffusionModel anisotropic_model_symmetric(double mu);

/// Porous medium equation dU/dt = mu Lap(U^g), A(u) = mu g u^(g-1) I.
/// When `manufactured`, the solution exp(-8 pi^2 mu t) sin(2 pi (x+y)) is
/// enforced through a closed-form source (g = 3, periodic).
DiffusionModel porous_medium_model(double mu, double gamma_exp, bool manufactured);

/// Porous medium (g = 2) with two disjoint compactly supported bumps on
/// [-10,10]^2, homogeneous Dirichlet.
DiffusionModel merging_bumps_model(double mu);

/// Porous medium (g = 2) with the indicator of [-1/2,1/2]^2 on [-1,1]^2,
/// homogeneous Dirichlet, solution bounds [0, 1].
DiffusionModel square_block_model(double mu);

/// dU/dt = mu (2 U_xx + 3 (U^1.5)_yy + U^2), homogeneous Dirichlet on
/// [0,1]^2, U0 = 200 sin(pi x) sin(pi y); finite-time blow-up.
DiffusionModel blowup_model(double mu);

/// Lookup by configuration name: heat | anisotropic | anisotropic_symmetric |
/// porous_manufactured | bumps | block | blowup.
DiffusionModel model_by_name(const std::string& name, double mu, double gamma_exp);

} // namespace ddg2d
