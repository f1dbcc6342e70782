#include "ddg2d/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace ddg2d {

double l2_error(const Discretization& disc, const DGField& u, const ExactSolution& exact,
                double t, const QuadratureRule& rule) {
    if (!exact) throw std::invalid_argument("l2_error: no exact solution");
    const Basis& basis = disc.basis();
    const int ndof = disc.n_dof();
    const int nq = rule.size();

    // Basis value table at the rule's points, shared across elements.
    std::vector<double> phi(static_cast<std::size_t>(nq) * ndof);
    for (int q = 0; q < nq; ++q)
        for (int j = 0; j < ndof; ++j) phi[q * ndof + j] = basis.value(j, rule.points[q]);

    double total = 0.0;
    for (int e = 0; e < disc.mesh().n_elements(); ++e) {
        const AffineMap& m = disc.map(e);
        const auto c = u.element(e);
        double local = 0.0;
        for (int q = 0; q < nq; ++q) {
            double uh = 0.0;
            for (int j = 0; j < ndof; ++j) uh += c[j] * phi[q * ndof + j];
            const Vec2 x = m.to_physical(rule.points[q]);
            const double d = uh - exact(x.x, x.y, t);
            local += rule.weights[q] * d * d;
        }
        total += m.det * local;
    }
    return std::sqrt(total);
}

double l2_error(const Discretization& disc, const DGField& u, const ExactSolution& exact,
                double t) {
    // (k+1) Gauss points per direction <=> exactness 2k+1.
    return l2_error(disc, u, exact, t, volume_rule(2 * disc.degree() + 1));
}

double linf_error(const Discretization& disc, const DGField& u, const ExactSolution& exact,
                  double t) {
    if (!exact) throw std::invalid_argument("linf_error: no exact solution");
    // 19 points per direction -> 361 sample points per element, generated
    // by the same collapsed tensor construction as the volume rules.
    const std::vector<Vec2> pts = collapsed_sample_points(19);
    const Basis& basis = disc.basis();
    const int ndof = disc.n_dof();
    const int nq = static_cast<int>(pts.size());
    const std::vector<double> phi = basis.values_at(pts);

    double worst = 0.0;
    for (int e = 0; e < disc.mesh().n_elements(); ++e) {
        const AffineMap& m = disc.map(e);
        const auto c = u.element(e);
        for (int q = 0; q < nq; ++q) {
            double uh = 0.0;
            for (int j = 0; j < ndof; ++j) uh += c[j] * phi[q * ndof + j];
            const Vec2 x = m.to_physical(pts[q]);
            worst = std::fmax(worst, std::fabs(uh - exact(x.x, x.y, t)));
        }
    }
    return worst;
}

double order_between(double e_coarse, double e_fine) { return std::log2(e_coarse / e_fine); }

} // namespace ddg2d
