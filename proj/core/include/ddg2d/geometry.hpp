#pragma once

#include <array>
#include <cmath>

namespace ddg2d {

/// 2D point / vector in either physical or reference coordinates.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double a) const { return {a * x, a * y}; }
    constexpr Vec2& operator+=(Vec2 o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
};

constexpr Vec2 operator*(double a, Vec2 v) { return {a * v.x, a * v.y}; }

/// Symmetric second derivatives of a scalar field: (d_xx, d_xy, d_yy).
struct Hess2 {
    double xx = 0.0;
    double xy = 0.0;
    double yy = 0.0;
};

/// Dense 2x2 matrix, row-major. Used for diffusion matrices and Jacobians.
struct Mat2 {
    double a11 = 0.0, a12 = 0.0;
    double a21 = 0.0, a22 = 0.0;

    static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr Mat2 diag(double d1, double d2) { return {d1, 0.0, 0.0, d2}; }

    constexpr Vec2 apply(Vec2 v) const { return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y}; }
    constexpr Vec2 apply_transpose(Vec2 v) const {
        return {a11 * v.x + a21 * v.y, a12 * v.x + a22 * v.y};
    }
    constexpr Mat2 operator*(double a) const { return {a * a11, a * a12, a * a21, a * a22}; }
    constexpr double det() const { return a11 * a22 - a12 * a21; }

    /// Eigenvalues assuming they are real (always the case for the
    /// diffusion matrices in the model catalogue).
    std::array<double, 2> real_eigenvalues() const {
        const double tr = a11 + a22;
        const double disc = std::sqrt(std::fmax(tr * tr - 4.0 * det(), 0.0));
        return {0.5 * (tr - disc), 0.5 * (tr + disc)};
    }

    /// Largest singular value (spectral norm).
    double spectral_norm() const {
        // Singular values of A are sqrt of eigenvalues of A^T A.
        const double b11 = a11 * a11 + a21 * a21;
        const double b12 = a11 * a12 + a21 * a22;
        const double b22 = a12 * a12 + a22 * a22;
        const double tr = b11 + b22;
        const double dt = b11 * b22 - b12 * b12;
        const double disc = std::sqrt(std::fmax(tr * tr - 4.0 * dt, 0.0));
        return std::sqrt(0.5 * (tr + disc));
    }
};

} // namespace ddg2d
