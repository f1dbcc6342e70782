#include "ddg2d/basis.hpp"

#include "ddg2d/mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace ddg2d {

namespace {

// Coefficients of the Jacobi polynomial P_n^(alpha,0) in powers of x,
// via the standard three-term recurrence. Exact small rationals, so the
// double arithmetic is effectively exact for the degrees used here.
std::vector<double> jacobi_coeffs(int n, double alpha) {
    std::vector<double> pm1{1.0}; // P_0
    if (n == 0) return pm1;
    std::vector<double> p{0.5 * alpha, 0.5 * (alpha + 2.0)}; // P_1 = (a+2)/2 x + a/2
    for (int m = 2; m <= n; ++m) {
        const double mm = static_cast<double>(m);
        const double c = 2.0 * mm * (mm + alpha) * (2.0 * mm + alpha - 2.0);
        const double ax = (2.0 * mm + alpha - 1.0) * (2.0 * mm + alpha) * (2.0 * mm + alpha - 2.0) / c;
        const double a0 = (2.0 * mm + alpha - 1.0) * (alpha * alpha) / c;
        const double b = 2.0 * (mm + alpha - 1.0) * (mm - 1.0) * (2.0 * mm + alpha) / c;
        std::vector<double> next(m + 1, 0.0);
        for (int i = 0; i < static_cast<int>(p.size()); ++i) {
            next[i + 1] += ax * p[i];
            next[i] += a0 * p[i];
        }
        for (int i = 0; i < static_cast<int>(pm1.size()); ++i) next[i] -= b * pm1[i];
        pm1 = std::move(p);
        p = std::move(next);
    }
    return p;
}

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

Basis::Basis(int degree) : k_(degree), n_dof_(dof_count(degree)) {
    if (degree < 0 || degree > 4)
        throw std::invalid_argument("Basis: degree must be in [0, 4]");

    const int stride = k_ + 1;
    coeff_.assign(n_dof_, std::vector<double>(stride * stride, 0.0));

    // Dubiner construction: for m + n <= k,
    //   psi_{mn}(r,s) = P_m(eta1) ((1-eta2)/2)^m P_n^(2m+1,0)(eta2)
    // with eta1 = 2r/(1-s) - 1, eta2 = 2s - 1. The product
    // P_m(eta1) (1-s)^m is a polynomial in (r, s); expanding everything
    // into monomials keeps derivative evaluation exact.
    int dof = 0;
    for (int d = 0; d <= k_; ++d) {
        for (int m = 0; m <= d; ++m) {
            const int n = d - m;
            auto& c = coeff_[dof];

            // part1 = sum_i p_i (2r - t)^i t^(m-i), t = 1 - s, as coeffs of r^a s^b.
            const std::vector<double> pm = jacobi_coeffs(m, 0.0);
            std::vector<double> part1(stride * stride, 0.0);
            for (int i = 0; i < static_cast<int>(pm.size()); ++i) {
                if (pm[i] == 0.0) continue;
                // (2r - t)^i = sum_j C(i,j) (2r)^j (-t)^(i-j); times t^(m-i).
                for (int j = 0; j <= i; ++j) {
                    const double f = pm[i] * binom(i, j) * std::pow(2.0, j) *
                                     ((i - j) % 2 == 0 ? 1.0 : -1.0);
                    // f * r^j * t^(m-j); t^(m-j) = (1-s)^(m-j)
                    const int tp = m - j;
                    for (int l = 0; l <= tp; ++l) {
                        part1[j * stride + l] +=
                            f * binom(tp, l) * (l % 2 == 0 ? 1.0 : -1.0);
                    }
                }
            }

            // part2 = P_n^(2m+1,0)(2s - 1) as coefficients of s^b.
            const std::vector<double> pn = jacobi_coeffs(n, 2.0 * m + 1.0);
            std::vector<double> part2(n + 1, 0.0);
            for (int i = 0; i < static_cast<int>(pn.size()); ++i) {
                if (pn[i] == 0.0) continue;
                for (int j = 0; j <= i; ++j) {
                    part2[j] += pn[i] * binom(i, j) * std::pow(2.0, j) *
                                ((i - j) % 2 == 0 ? 1.0 : -1.0);
                }
            }

            const double norm = std::sqrt(2.0 * (2.0 * m + 1.0) * (m + n + 1.0));
            for (int a = 0; a <= k_; ++a)
                for (int b = 0; b <= k_ - a; ++b)
                    if (part1[a * stride + b] != 0.0)
                        for (int e = 0; e <= n; ++e)
                            c[a * stride + b + e] += norm * part1[a * stride + b] * part2[e];
            ++dof;
        }
    }
}

double Basis::eval_table(const std::vector<double>& c, Vec2 p) const {
    // Horner in r, inner Horner in s.
    const int stride = k_ + 1;
    double result = 0.0;
    for (int a = k_; a >= 0; --a) {
        double row = 0.0;
        for (int b = k_; b >= 0; --b) row = row * p.y + c[a * stride + b];
        result = result * p.x + row;
    }
    return result;
}

double Basis::value(int dof, Vec2 p) const { return eval_table(coeff_[dof], p); }

Vec2 Basis::gradient(int dof, Vec2 p) const {
    const int stride = k_ + 1;
    const auto& c = coeff_[dof];
    std::vector<double> dr(stride * stride, 0.0), ds(stride * stride, 0.0);
    for (int a = 1; a <= k_; ++a)
        for (int b = 0; b <= k_ - a; ++b) dr[(a - 1) * stride + b] = a * c[a * stride + b];
    for (int a = 0; a <= k_; ++a)
        for (int b = 1; b <= k_ - a; ++b) ds[a * stride + (b - 1)] = b * c[a * stride + b];
    return {eval_table(dr, p), eval_table(ds, p)};
}

Hess2 Basis::hessian(int dof, Vec2 p) const {
    const int stride = k_ + 1;
    const auto& c = coeff_[dof];
    std::vector<double> drr(stride * stride, 0.0), drs(stride * stride, 0.0),
        dss(stride * stride, 0.0);
    for (int a = 2; a <= k_; ++a)
        for (int b = 0; b <= k_ - a; ++b)
            drr[(a - 2) * stride + b] = a * (a - 1) * c[a * stride + b];
    for (int a = 1; a <= k_; ++a)
        for (int b = 1; b <= k_ - a; ++b)
            drs[(a - 1) * stride + (b - 1)] = a * b * c[a * stride + b];
    for (int a = 0; a <= k_; ++a)
        for (int b = 2; b <= k_ - a; ++b)
            dss[a * stride + (b - 2)] = b * (b - 1) * c[a * stride + b];
    return {eval_table(drr, p), eval_table(drs, p), eval_table(dss, p)};
}

std::vector<double> Basis::values_at(const std::vector<Vec2>& pts) const {
    std::vector<double> table(pts.size() * n_dof_);
    for (std::size_t q = 0; q < pts.size(); ++q)
        for (int j = 0; j < n_dof_; ++j) table[q * n_dof_ + j] = value(j, pts[q]);
    return table;
}

AffineMap AffineMap::from_vertices(Vec2 a, Vec2 b, Vec2 c) {
    AffineMap m;
    m.v0 = a;
    m.jac = {b.x - a.x, c.x - a.x, b.y - a.y, c.y - a.y};
    m.det = m.jac.det();
    if (m.det <= 0.0)
        throw std::invalid_argument("AffineMap: element is not counterclockwise");
    m.inv = {m.jac.a22 / m.det, -m.jac.a12 / m.det, -m.jac.a21 / m.det, m.jac.a11 / m.det};
    return m;
}

AffineMap AffineMap::from_element(const Mesh& mesh, int element) {
    const auto& e = mesh.elements[element];
    return from_vertices(mesh.vertices[e[0]], mesh.vertices[e[1]], mesh.vertices[e[2]]);
}

Vec2 physical_gradient(const AffineMap& map, Vec2 ref_grad) {
    return map.inv.apply_transpose(ref_grad);
}

Hess2 physical_hessian(const AffineMap& map, const Hess2& h) {
    // H_x = J^{-T} H_ref J^{-1}, with J^{-1} = [[i11,i12],[i21,i22]].
    const Mat2& i = map.inv;
    const double xx = i.a11 * (h.xx * i.a11 + h.xy * i.a21) + i.a21 * (h.xy * i.a11 + h.yy * i.a21);
    const double xy = i.a11 * (h.xx * i.a12 + h.xy * i.a22) + i.a21 * (h.xy * i.a12 + h.yy * i.a22);
    const double yy = i.a12 * (h.xx * i.a12 + h.xy * i.a22) + i.a22 * (h.xy * i.a12 + h.yy * i.a22);
    return {xx, xy, yy};
}

} // namespace ddg2d
