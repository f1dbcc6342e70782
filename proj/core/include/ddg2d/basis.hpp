#pragma once

#include "ddg2d/geometry.hpp"

#include <array>
#include <vector>

namespace ddg2d {

struct Mesh;

/// Orthonormal (Dubiner-type) polynomial basis of degree k on the reference
/// triangle {(r,s): r,s >= 0, r+s <= 1}. Orthonormal under the plain L2
/// inner product, so the element mass matrix under an affine map is
/// det(J) * I. Each basis function is stored as an exact bivariate
/// monomial-coefficient table; values and first/second derivatives are
/// evaluated from those tables analytically.
class Basis {
public:
    explicit Basis(int degree);

    int degree() const { return k_; }
    int n_dof() const { return n_dof_; }

    double value(int dof, Vec2 p) const;
    Vec2 gradient(int dof, Vec2 p) const;
    Hess2 hessian(int dof, Vec2 p) const;

    /// Value table at a set of reference points, row-major [point][dof].
    std::vector<double> values_at(const std::vector<Vec2>& pts) const;

    static int dof_count(int degree) { return (degree + 1) * (degree + 2) / 2; }

private:
    // coeff_[dof][a * (k_+1) + b] holds the coefficient of r^a s^b.
    int k_;
    int n_dof_;
    std::vector<std::vector<double>> coeff_;

    double eval_table(const std::vector<double>& c, Vec2 p) const;
};

/// Affine map from the reference triangle onto a physical element:
/// x = v0 + J * (r, s). The Jacobian is constant, det(J) = 2 * area > 0
/// for counterclockwise elements.
struct AffineMap {
    Vec2 v0;
    Mat2 jac;
    Mat2 inv;
    double det = 0.0;

    static AffineMap from_vertices(Vec2 a, Vec2 b, Vec2 c);
    static AffineMap from_element(const Mesh& mesh, int element);

    Vec2 to_physical(Vec2 ref) const { return v0 + jac.apply(ref); }
    Vec2 to_reference(Vec2 x) const { return inv.apply(x - v0); }
};

/// Chain rule for a constant-Jacobian map: reference gradient to physical.
Vec2 physical_gradient(const AffineMap& map, Vec2 ref_grad);

/// Chain rule for second derivatives: H_x = J^{-T} H_ref J^{-1}.
Hess2 physical_hessian(const AffineMap& map, const Hess2& ref_hess);

} // namespace ddg2d
