#include "ddg2d/discretization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ddg2d {

Discretization::Discretization(Mesh mesh, int degree, int volume_exactness, int edge_exactness)
    : mesh_(std::move(mesh)), basis_(degree), vol_(volume_rule(volume_exactness)),
      edge_(edge_rule(edge_exactness)), n_dof_(basis_.n_dof()), nq_e_(edge_.size()) {
    omega_ = min_volume_weight(vol_);

    maps_.reserve(mesh_.n_elements());
    for (int e = 0; e < mesh_.n_elements(); ++e) maps_.push_back(AffineMap::from_element(mesh_, e));

    // Reference volume tables.
    const int nq_v = vol_.size();
    phi_vol_.resize(static_cast<std::size_t>(nq_v) * n_dof_);
    dphi_vol_.resize(static_cast<std::size_t>(nq_v) * n_dof_);
    for (int q = 0; q < nq_v; ++q) {
        for (int j = 0; j < n_dof_; ++j) {
            phi_vol_[q * n_dof_ + j] = basis_.value(j, vol_.points[q]);
            dphi_vol_[q * n_dof_ + j] = basis_.gradient(j, vol_.points[q]);
        }
    }

    // Two-sided physical trace tables at edge quadrature points.
    const std::size_t per_edge = static_cast<std::size_t>(nq_e_) * 6 * n_dof_;
    trace_minus_.assign(per_edge * mesh_.n_edges(), 0.0);
    trace_plus_.assign(per_edge * mesh_.n_edges(), 0.0);
    edge_w_.resize(static_cast<std::size_t>(mesh_.n_edges()) * nq_e_);
    edge_x_.resize(static_cast<std::size_t>(mesh_.n_edges()) * nq_e_);

    auto fill_side = [&](std::vector<double>& table, int edge, int q, int element, Vec2 x) {
        const AffineMap& m = maps_[element];
        const Vec2 ref = m.to_reference(x);
        double* out = table.data() + (static_cast<std::size_t>(edge) * nq_e_ + q) * 6 * n_dof_;
        for (int j = 0; j < n_dof_; ++j) {
            const Vec2 g = physical_gradient(m, basis_.gradient(j, ref));
            const Hess2 h = physical_hessian(m, basis_.hessian(j, ref));
            out[0 * n_dof_ + j] = basis_.value(j, ref);
            out[1 * n_dof_ + j] = g.x;
            out[2 * n_dof_ + j] = g.y;
            out[3 * n_dof_ + j] = h.xx;
            out[4 * n_dof_ + j] = h.xy;
            out[5 * n_dof_ + j] = h.yy;
        }
    };

    for (int e = 0; e < mesh_.n_edges(); ++e) {
        const Edge& edge = mesh_.edges[e];
        const Vec2 p0 = mesh_.vertices[edge.vertices[0]];
        const Vec2 p1 = mesh_.vertices[edge.vertices[1]];
        for (int q = 0; q < nq_e_; ++q) {
            const double tq = edge_.points[q].x;
            const Vec2 x = p0 + tq * (p1 - p0);
            edge_x_[e * nq_e_ + q] = x;
            edge_w_[e * nq_e_ + q] = edge_.weights[q] * edge.length;
            fill_side(trace_minus_, e, q, edge.owner, x);
            if (edge.neighbor >= 0) fill_side(trace_plus_, e, q, edge.neighbor, x + edge.shift);
        }
    }

    // Limiter sample set.
    sample_pts_ = vol_.points;
    for (int q = 0; q < nq_e_; ++q) {
        const double t = edge_.points[q].x;
        sample_pts_.push_back({t, 0.0});
        sample_pts_.push_back({1.0 - t, t});
        sample_pts_.push_back({0.0, 1.0 - t});
    }
    sample_pts_.push_back({0.0, 0.0});
    sample_pts_.push_back({1.0, 0.0});
    sample_pts_.push_back({0.0, 1.0});
    phi_sample_ = basis_.values_at(sample_pts_);
}

TracePoint Discretization::trace(const DGField& u, int edge, int q, int side) const {
    const int element = side == 0 ? mesh_.edges[edge].owner : mesh_.edges[edge].neighbor;
    if (element < 0) throw std::invalid_argument("trace: boundary edge has no neighbor side");
    const double* tab = trace_table(edge, q, side);
    const auto c = u.element(element);
    TracePoint tp;
    for (int j = 0; j < n_dof_; ++j) {
        tp.u += c[j] * tab[0 * n_dof_ + j];
        tp.grad.x += c[j] * tab[1 * n_dof_ + j];
        tp.grad.y += c[j] * tab[2 * n_dof_ + j];
        tp.hess.xx += c[j] * tab[3 * n_dof_ + j];
        tp.hess.xy += c[j] * tab[4 * n_dof_ + j];
        tp.hess.yy += c[j] * tab[5 * n_dof_ + j];
    }
    return tp;
}

DGField Discretization::project(const std::function<double(double, double)>& f) const {
    DGField u(mesh_.n_elements(), n_dof_);
    const int nq = vol_.size();
    for (int e = 0; e < mesh_.n_elements(); ++e) {
        const AffineMap& m = maps_[e];
        auto c = u.element(e);
        for (int q = 0; q < nq; ++q) {
            const Vec2 x = m.to_physical(vol_.points[q]);
            const double fw = f(x.x, x.y) * vol_.weights[q];
            for (int j = 0; j < n_dof_; ++j) c[j] += fw * phi_vol_[q * n_dof_ + j];
        }
    }
    return u;
}

double Discretization::evaluate(const DGField& u, int element, Vec2 ref) const {
    const auto c = u.element(element);
    double v = 0.0;
    for (int j = 0; j < n_dof_; ++j) v += c[j] * basis_.value(j, ref);
    return v;
}

int Discretization::locate(Vec2 x) const {
    const int n = mesh_.n_per_side;
    const double h = mesh_.side_length / n;
    auto cell = [&](double c, double o) {
        int i = static_cast<int>(std::floor((c - o) / h));
        return std::clamp(i, 0, n - 1);
    };
    const int i = cell(x.x, mesh_.origin.x);
    const int j = cell(x.y, mesh_.origin.y);
    const double u = (x.x - mesh_.origin.x) / h - i;
    const double v = (x.y - mesh_.origin.y) / h - j;
    const int square = 2 * (j * n + i);
    return u + v <= 1.0 ? square : square + 1;
}

double Discretization::evaluate_at(const DGField& u, Vec2 x) const {
    const int e = locate(x);
    return evaluate(u, e, maps_[e].to_reference(x));
}

} // namespace ddg2d
