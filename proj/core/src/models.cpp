#include "ddg2d/models.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ddg2d {

namespace {

constexpr double pi = std::numbers::pi;

// u^p with u clamped to zero inside fractional powers, keeping A(u) real
// and positive semidefinite when the limiter permits exact zeros.
double clamped_pow(double u, double p) {
    const double rp = std::round(p);
    if (std::fabs(p - rp) < 1e-12 && rp >= 0.0) {
        const int ip = static_cast<int>(rp);
        double r = 1.0;
        for (int i = 0; i < ip; ++i) r *= u;
        return r;
    }
    return std::pow(std::fmax(u, 0.0), p);
}

} // namespace

DiffusionModel heat_model(double mu) {
    DiffusionModel m;
    m.name = "heat";
    m.mu_ref = mu;
    m.A = [mu](double) { return Mat2::identity() * mu; };
    m.constant_matrix = true;
    m.gamma = mu;
    m.gamma_star = mu;
    m.xi_bound = mu;
    m.gamma_star_on_range = [mu](double, double) { return mu; };
    m.exact_solution = [mu](double x, double y, double t) {
        return std::exp(-8.0 * pi * pi * mu * t) * std::cos(2.0 * pi * (x + y));
    };
    m.initial_data = [m](double x, double y) { return m.exact_solution(x, y, 0.0); };
    m.boundary = BoundaryKind::periodic;
    m.domain_origin = {0.0, 0.0};
    m.domain_length = 1.0;
    m.default_lambda = 0.1;
    m.default_T = 1.0;
    return m;
}

namespace {

DiffusionModel anisotropic_common(double mu, Mat2 A) {
    DiffusionModel m;
    m.mu_ref = mu;
    m.A = [A](double) { return A; };
    m.constant_matrix = true;
    const auto eigs = A.real_eigenvalues();
    m.gamma = eigs[0];
    m.gamma_star = eigs[1];
    m.xi_bound = A.spectral_norm();
    m.gamma_star_on_range = [gs = m.gamma_star](double, double) { return gs; };
    m.exact_solution = [mu](double x, double y, double t) {
        return std::exp(-32.0 * pi * pi * mu * t) * std::cos(2.0 * pi * y) *
               std::cos(4.0 * pi * x - 2.0 * pi * y);
    };
    m.initial_data = [m](double x, double y) { return m.exact_solution(x, y, 0.0); };
    m.boundary = BoundaryKind::periodic;
    m.domain_origin = {0.0, 0.0};
    m.domain_length = 1.0;
    m.default_lambda = 0.1;
    m.default_T = 1.0;
    return m;
}

} // namespace

DiffusionModel anisotropic_model(double mu) {
    DiffusionModel m = anisotropic_common(mu, Mat2{2.0 * mu, 1.0 * mu, 2.0 * mu, 3.0 * mu});
    m.name = "anisotropic";
    return m;
}

DiffusionModel anisotropic_model_symmetric(double mu) {
    DiffusionModel m = anisotropic_common(mu, Mat2{2.0 * mu, 1.5 * mu, 1.5 * mu, 3.0 * mu});
    m.name = "anisotropic_symmetric";
    return m;
}

DiffusionModel porous_medium_model(double mu, double gamma_exp, bool manufactured) {
    DiffusionModel m;
    m.name = manufactured ? "porous_manufactured" : "porous";
    m.mu_ref = mu;
    const double g = gamma_exp;
    m.A = [mu, g](double u) { return Mat2::identity() * (mu * g * clamped_pow(u, g - 1.0)); };
    m.gamma_star_on_range = [mu, g](double lo, double hi) {
        const double amp = std::fmax(std::fabs(lo), std::fabs(hi));
        return mu * g * clamped_pow(amp, g - 1.0);
    };

    if (manufactured) {
        // Enforced solution U = exp(-8 pi^2 mu t) sin(2 pi (x+y)) with
        // S = U_t - mu Lap(U^3):
        //   U_t        = -8 pi^2 mu E sin(th)
        //   Lap(U^3)   = 24 pi^2 E^3 (2 sin(th) cos^2(th) - sin^3(th)),
        // E = exp(-8 pi^2 mu t), th = 2 pi (x+y). Validated against a
        // finite-difference oracle in the test suite.
        if (std::fabs(gamma_exp - 3.0) > 1e-14)
            throw std::invalid_argument("porous_medium_model: manufactured source requires gamma_exp = 3");
        m.exact_solution = [mu](double x, double y, double t) {
            return std::exp(-8.0 * pi * pi * mu * t) * std::sin(2.0 * pi * (x + y));
        };
        m.source = [mu](double, double x, double y, double t) {
            const double E = std::exp(-8.0 * pi * pi * mu * t);
            const double th = 2.0 * pi * (x + y);
            const double sn = std::sin(th), cs = std::cos(th);
            const double ut = -8.0 * pi * pi * mu * E * sn;
            const double lap_u3 = 24.0 * pi * pi * E * E * E * (2.0 * sn * cs * cs - sn * sn * sn);
            return ut - mu * lap_u3;
        };
        m.initial_data = [m](double x, double y) { return m.exact_solution(x, y, 0.0); };
        m.boundary = BoundaryKind::periodic;
        m.domain_origin = {0.0, 0.0};
        m.domain_length = 1.0;
        // Solution range [-1, 1].
        m.gamma = 0.0;
        m.gamma_star = m.gamma_star_on_range(-1.0, 1.0);
        m.xi_bound = m.gamma_star;
        m.strongly_nonlinear = true;
        m.default_lambda = 0.1;
        m.default_T = 1.0;
    } else {
        m.gamma = 0.0;
        m.gamma_star = m.gamma_star_on_range(0.0, 1.0);
        m.xi_bound = m.gamma_star;
        m.boundary = BoundaryKind::dirichlet;
    }
    return m;
}

DiffusionModel merging_bumps_model(double mu) {
    DiffusionModel m = porous_medium_model(mu, 2.0, false);
    m.name = "bumps";
    m.initial_data = [](double x, double y) {
        const double q1 = 6.0 - (x - 2.0) * (x - 2.0) - (y + 2.0) * (y + 2.0);
        if (q1 > 0.0) return std::exp(-1.0 / q1);
        const double q2 = 6.0 - (x + 2.0) * (x + 2.0) - (y - 2.0) * (y - 2.0);
        if (q2 > 0.0) return std::exp(-1.0 / q2);
        return 0.0;
    };
    m.boundary = BoundaryKind::dirichlet;
    m.domain_origin = {-10.0, -10.0};
    m.domain_length = 20.0;
    // Initial peak exp(-1/6); the solution only decays from there.
    const double peak = std::exp(-1.0 / 6.0);
    m.gamma = 0.0;
    m.gamma_star = m.gamma_star_on_range(0.0, peak);
    m.xi_bound = m.gamma_star;
    m.default_lambda = 0.1;
    m.default_T = 4.0;
    return m;
}

DiffusionModel square_block_model(double mu) {
    DiffusionModel m = porous_medium_model(mu, 2.0, false);
    m.name = "block";
    m.initial_data = [](double x, double y) {
        return (std::fabs(x) <= 0.5 && std::fabs(y) <= 0.5) ? 1.0 : 0.0;
    };
    m.boundary = BoundaryKind::dirichlet;
    m.domain_origin = {-1.0, -1.0};
    m.domain_length = 2.0;
    m.solution_bounds = {{0.0, 1.0}};
    m.gamma = 0.0;
    m.gamma_star = m.gamma_star_on_range(0.0, 1.0);
    m.xi_bound = m.gamma_star;
    m.default_lambda = 0.1;
    m.default_T = 0.005;
    return m;
}

DiffusionModel blowup_model(double mu) {
    DiffusionModel m;
    m.name = "blowup";
    m.mu_ref = mu;
    m.A = [mu](double u) {
        return Mat2::diag(2.0 * mu, 4.5 * mu * std::sqrt(std::fmax(u, 0.0)));
    };
    m.gamma_star_on_range = [mu](double, double hi) {
        return mu * std::fmax(2.0, 4.5 * std::sqrt(std::fmax(hi, 0.0)));
    };
    m.source = [mu](double u, double, double, double) { return mu * u * u; };
    m.initial_data = [](double x, double y) {
        return 200.0 * std::sin(pi * x) * std::sin(pi * y);
    };
    m.boundary = BoundaryKind::dirichlet;
    m.domain_origin = {0.0, 0.0};
    m.domain_length = 1.0;
    // Positivity only: no upper bound.
    m.solution_bounds = {{0.0, std::numeric_limits<double>::infinity()}};
    m.gamma = 0.0;
    m.gamma_star = m.gamma_star_on_range(0.0, 200.0);
    m.xi_bound = m.gamma_star;
    m.default_lambda = 0.01;
    m.default_T = 0.05;
    return m;
}

DiffusionModel model_by_name(const std::string& name, double mu, double gamma_exp) {
    if (name == "heat") return heat_model(mu);
    if (name == "anisotropic") return anisotropic_model(mu);
    if (name == "anisotropic_symmetric") return anisotropic_model_symmetric(mu);
    if (name == "porous_manufactured") return porous_medium_model(mu, gamma_exp, true);
    if (name == "bumps") return merging_bumps_model(mu);
    if (name == "block") return square_block_model(mu);
    if (name == "blowup") return blowup_model(mu);
    throw std::invalid_argument("unknown model: " + name);
}

} // namespace ddg2d
