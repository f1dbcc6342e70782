#pragma once

#include "ddg2d/basis.hpp"
#include "ddg2d/field.hpp"
#include "ddg2d/mesh.hpp"
#include "ddg2d/quadrature.hpp"
#include "ddg2d/scheme.hpp"

#include <functional>
#include <vector>

namespace ddg2d {

/// Precomputed evaluation tables tying a mesh, a basis and quadrature rules
/// together: reference basis tables at volume points, two-sided physical
/// trace tables (value, gradient, second derivatives) at edge quadrature
/// points, and the limiter sample set. Immutable after construction; all
/// queries are safe for concurrent use.
class Discretization {
public:
    Discretization(Mesh mesh, int degree, int volume_exactness, int edge_exactness);

    const Mesh& mesh() const { return mesh_; }
    const Basis& basis() const { return basis_; }
    const QuadratureRule& vol_rule() const { return vol_; }
    const QuadratureRule& edg_rule() const { return edge_; }

    int degree() const { return basis_.degree(); }
    int n_dof() const { return basis_.n_dof(); }
    int n_volume_points() const { return vol_.size(); }
    int n_edge_points() const { return edge_.size(); }

    const AffineMap& map(int element) const { return maps_[element]; }
    double omega() const { return omega_; }

    // Reference basis tables at volume quadrature points, [q * n_dof + j].
    const std::vector<double>& phi_volume() const { return phi_vol_; }
    const std::vector<Vec2>& dphi_volume() const { return dphi_vol_; }

    /// Physical quadrature weight (rule weight times edge length) of edge
    /// quadrature point q on this edge.
    double edge_weight(int edge, int q) const { return edge_w_[edge * nq_e_ + q]; }
    /// Physical location of that point (owner side; add Edge::shift for
    /// the neighbor side of a periodic edge).
    Vec2 edge_point(int edge, int q) const { return edge_x_[edge * nq_e_ + q]; }

    /// Trace tables: value + physical derivatives of basis function j of
    /// the owner (side 0) or neighbor (side 1) at edge point q. Layout of
    /// the 6 components per (edge, q): v, gx, gy, hxx, hxy, hyy.
    const double* trace_table(int edge, int q, int side) const {
        const auto& t = side == 0 ? trace_minus_ : trace_plus_;
        return t.data() + (static_cast<std::size_t>(edge) * nq_e_ + q) * 6 * n_dof_;
    }

    /// One-sided trace of a field at an edge quadrature point; side 0 is
    /// the owner. Boundary edges only have side 0.
    TracePoint trace(const DGField& u, int edge, int q, int side) const;

    /// Elementwise L2 projection. Exact for polynomials of degree <= k when
    /// the volume rule is exact to degree 2k.
    DGField project(const std::function<double(double, double)>& f) const;

    double evaluate(const DGField& u, int element, Vec2 ref) const;

    /// Locate the element containing a physical point (uniform meshes only)
    /// and evaluate the field there.
    int locate(Vec2 x) const;
    double evaluate_at(const DGField& u, Vec2 x) const;

    // Limiter sample set: volume points, edge points on the three local
    // edges, and the three vertices, in reference coordinates.
    int n_samples() const { return static_cast<int>(sample_pts_.size()); }
    const std::vector<double>& phi_samples() const { return phi_sample_; }

private:
    Mesh mesh_;
    Basis basis_;
    QuadratureRule vol_;
    QuadratureRule edge_;
    double omega_ = 0.0;
    int n_dof_ = 0;
    int nq_e_ = 0;

    std::vector<AffineMap> maps_;
    std::vector<double> phi_vol_;
    std::vector<Vec2> dphi_vol_;
    std::vector<double> trace_minus_;
    std::vector<double> trace_plus_;
    std::vector<double> edge_w_;
    std::vector<Vec2> edge_x_;
    std::vector<Vec2> sample_pts_;
    std::vector<double> phi_sample_;
};

} // namespace ddg2d
