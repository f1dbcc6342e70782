#include "ddg2d/assembly.hpp"

#include <cmath>
#include <numbers>

namespace ddg2d {

bool assemble_residual(const Discretization& disc, const DiffusionModel& model,
                       const SchemeConfig& scheme, const DGField& u, double t, DGField& dudt) {
    const Mesh& mesh = disc.mesh();
    const int ndof = disc.n_dof();
    const int nq_v = disc.n_volume_points();
    const int nq_e = disc.n_edge_points();
    const auto& phi = disc.phi_volume();
    const auto& dphi = disc.dphi_volume();
    const auto& wv = disc.vol_rule().weights;
    const bool has_source = model.has_source();

    dudt.n_elements = u.n_elements;
    dudt.n_dof = ndof;
    dudt.coeff.assign(u.coeff.size(), 0.0);
    dudt.time = u.time;

    const bool const_A = model.constant_matrix;
    const Mat2 A0 = const_A ? model.A(0.0) : Mat2{};

    // Volume terms. With the orthonormal reference basis the element mass
    // matrix is det(J) I, and det(J) cancels against the volume measure, so
    // no Jacobian factors appear here at all: the stiffness contribution is
    // -w_q (J^{-1} A grad_x u) . grad_ref(phi_j).
    for (int e = 0; e < mesh.n_elements(); ++e) {
        const AffineMap& m = disc.map(e);
        const auto c = u.element(e);
        auto r = dudt.element(e);
        for (int q = 0; q < nq_v; ++q) {
            const double* ph = phi.data() + static_cast<std::size_t>(q) * ndof;
            const Vec2* dp = dphi.data() + static_cast<std::size_t>(q) * ndof;
            double uq = 0.0;
            Vec2 gref;
            for (int j = 0; j < ndof; ++j) {
                uq += c[j] * ph[j];
                gref += c[j] * dp[j];
            }
            const Vec2 gx = m.inv.apply_transpose(gref);
            const Vec2 flux = (const_A ? A0 : model.A(uq)).apply(gx);
            const Vec2 pulled = m.inv.apply(flux) * wv[q];
            for (int j = 0; j < ndof; ++j) r[j] -= pulled.dot(dp[j]);
            if (has_source) {
                const Vec2 x = m.to_physical(disc.vol_rule().points[q]);
                const double sw = model.source(uq, x.x, x.y, t) * wv[q];
                for (int j = 0; j < ndof; ++j) r[j] += sw * ph[j];
            }
        }
    }

    // Edge terms, one pass per edge, scattered to both sides.
    const double sigma = static_cast<double>(scheme.sigma());
    const double beta0 = scheme.beta0, beta0v = scheme.beta0v, beta1 = scheme.beta1;
    const double g_bc = model.dirichlet_value;

    for (int e = 0; e < mesh.n_edges(); ++e) {
        const Edge& edge = mesh.edges[e];
        const bool interior = edge.neighbor >= 0;
        const Vec2 n = edge.normal;
        const double he = edge.h_e;
        const double inv_det_o = 1.0 / disc.map(edge.owner).det;
        const double inv_det_n = interior ? 1.0 / disc.map(edge.neighbor).det : 0.0;
        const auto co = u.element(edge.owner);
        auto ro = dudt.element(edge.owner);

        for (int q = 0; q < nq_e; ++q) {
            const double* tm = disc.trace_table(e, q, 0);
            TracePoint um;
            for (int j = 0; j < ndof; ++j) {
                um.u += co[j] * tm[0 * ndof + j];
                um.grad.x += co[j] * tm[1 * ndof + j];
                um.grad.y += co[j] * tm[2 * ndof + j];
                um.hess.xx += co[j] * tm[3 * ndof + j];
                um.hess.xy += co[j] * tm[4 * ndof + j];
                um.hess.yy += co[j] * tm[5 * ndof + j];
            }

            TracePoint up;
            const double* tp = nullptr;
            if (interior) {
                tp = disc.trace_table(e, q, 1);
                const auto cn = u.element(edge.neighbor);
                for (int j = 0; j < ndof; ++j) {
                    up.u += cn[j] * tp[0 * ndof + j];
                    up.grad.x += cn[j] * tp[1 * ndof + j];
                    up.grad.y += cn[j] * tp[2 * ndof + j];
                    up.hess.xx += cn[j] * tp[3 * ndof + j];
                    up.hess.xy += cn[j] * tp[4 * ndof + j];
                    up.hess.yy += cn[j] * tp[5 * ndof + j];
                }
            } else {
                // Mirrored Dirichlet ghost: u+ = 2g - u-, derivatives copied.
                up.u = 2.0 * g_bc - um.u;
                up.grad = um.grad;
                up.hess = um.hess;
            }

            const double uavg = 0.5 * (um.u + up.u);
            const double ju = up.u - um.u;
            const Vec2 xi = (const_A ? A0 : model.A(uavg)).apply_transpose(n);
            const Vec2 ghat = gradient_flux(um, up, n, he, beta0, beta1);
            const double fv = ghat.dot(xi);

            const double w = disc.edge_weight(e, q);
            const double fo = w * fv * inv_det_o;
            for (int j = 0; j < ndof; ++j) ro[j] += fo * tm[0 * ndof + j];

            if (interior) {
                auto rn = dudt.element(edge.neighbor);
                const double fn = w * fv * inv_det_n;
                for (int j = 0; j < ndof; ++j) rn[j] -= fn * tp[0 * ndof + j];
            }

            if (sigma != 0.0) {
                // -sigma * w * [u] * (tilde(grad v) . xi) for each side's
                // test functions, with tilde(grad v) formed in that side's
                // own outward frame; [u] and xi keep the owner convention.
                const double b0t = scheme.variant == Variant::symmetric ? beta0 : beta0v;
                const double so = -sigma * w * ju * inv_det_o;
                if (scheme.variant == Variant::ddgic) {
                    for (int j = 0; j < ndof; ++j) {
                        const double tfdot =
                            0.5 * (tm[1 * ndof + j] * xi.x + tm[2 * ndof + j] * xi.y);
                        ro[j] += so * tfdot;
                    }
                } else {
                    for (int j = 0; j < ndof; ++j) {
                        const double pen = -b0t * tm[0 * ndof + j] / he;
                        const double hnx = tm[3 * ndof + j] * n.x + tm[4 * ndof + j] * n.y;
                        const double hny = tm[4 * ndof + j] * n.x + tm[5 * ndof + j] * n.y;
                        const double tfx = pen * n.x + 0.5 * tm[1 * ndof + j] - beta1 * he * hnx;
                        const double tfy = pen * n.y + 0.5 * tm[2 * ndof + j] - beta1 * he * hny;
                        ro[j] += so * (tfx * xi.x + tfy * xi.y);
                    }
                }
                if (interior) {
                    auto rn = dudt.element(edge.neighbor);
                    const double sn = -sigma * w * ju * inv_det_n;
                    if (scheme.variant == Variant::ddgic) {
                        for (int j = 0; j < ndof; ++j) {
                            const double tfdot =
                                0.5 * (tp[1 * ndof + j] * xi.x + tp[2 * ndof + j] * xi.y);
                            rn[j] += sn * tfdot;
                        }
                    } else {
                        // Neighbor frame: outward normal is -n.
                        const Vec2 nl{-n.x, -n.y};
                        for (int j = 0; j < ndof; ++j) {
                            const double pen = -b0t * tp[0 * ndof + j] / he;
                            const double hnx = tp[3 * ndof + j] * nl.x + tp[4 * ndof + j] * nl.y;
                            const double hny = tp[4 * ndof + j] * nl.x + tp[5 * ndof + j] * nl.y;
                            const double tfx = pen * nl.x + 0.5 * tp[1 * ndof + j] - beta1 * he * hnx;
                            const double tfy = pen * nl.y + 0.5 * tp[2 * ndof + j] - beta1 * he * hny;
                            rn[j] += sn * (tfx * xi.x + tfy * xi.y);
                        }
                    }
                }
            }
        }
    }

    return dudt.all_finite();
}

double total_mass(const Discretization& disc, const DGField& u) {
    // integral over K of u = det(J) * c0 / sqrt(2).
    double m = 0.0;
    for (int e = 0; e < disc.mesh().n_elements(); ++e)
        m += disc.map(e).det * u.element(e)[0];
    return m / std::numbers::sqrt2;
}

double energy(const Discretization& disc, const DGField& u) {
    double s = 0.0;
    for (int e = 0; e < disc.mesh().n_elements(); ++e) {
        const auto c = u.element(e);
        double local = 0.0;
        for (int j = 0; j < u.n_dof; ++j) local += c[j] * c[j];
        s += disc.map(e).det * local;
    }
    return s;
}

double inner_product(const Discretization& disc, const DGField& u, const DGField& w) {
    double s = 0.0;
    for (int e = 0; e < disc.mesh().n_elements(); ++e) {
        const auto cu = u.element(e);
        const auto cw = w.element(e);
        double local = 0.0;
        for (int j = 0; j < u.n_dof; ++j) local += cu[j] * cw[j];
        s += disc.map(e).det * local;
    }
    return s;
}

} // namespace ddg2d
