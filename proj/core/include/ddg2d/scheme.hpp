#pragma once

#include "ddg2d/geometry.hpp"
#include "ddg2d/models.hpp"

#include <string>

namespace ddg2d {

/// The four flux variants. sigma is the coefficient of the interface term
/// involving the test-function flux: 0 for baseline, +1 for ddgic and
/// symmetric, -1 for nonsymmetric.
enum class Variant { baseline, ddgic, symmetric, nonsymmetric };

Variant variant_by_name(const std::string& name);
std::string variant_name(Variant v);

struct SchemeConfig {
    Variant variant = Variant::ddgic;
    int k = 2;
    double beta0 = 9.0;
    double beta0v = 4.5;
    double beta1 = 1.0 / 12.0;

    int sigma() const {
        switch (variant) {
            case Variant::baseline: return 0;
            case Variant::ddgic:
            case Variant::symmetric: return 1;
            case Variant::nonsymmetric: return -1;
        }
        return 0;
    }

    /// beta0 = (k+1)^2, beta0v = beta0/2, beta1 = 1/(2k(k+1)) for k >= 1;
    /// k = 0 falls back to beta0 = 1, beta1 = 0.
    static SchemeConfig defaults(Variant variant, int k);
};

/// One-sided trace of a scalar field at an edge quadrature point: value,
/// gradient, and second derivatives.
struct TracePoint {
    double u = 0.0;
    Vec2 grad;
    Hess2 hess;
};

inline double jump(double minus, double plus) { return plus - minus; }
inline double average(double minus, double plus) { return 0.5 * (plus + minus); }

/// Direction vector xi({u}) = A({u})^T n.
Vec2 direction_vector(const DiffusionModel& model, double u_avg, Vec2 normal);

/// DDG numerical flux for the solution gradient:
///   hat(u)_xi = beta0 [u]/h_e n_i + {u_xi} + beta1 h_e [u_xx n1 + u_yx n2] (i = 1)
/// and the analogous second component. `minus` is the trace interior to
/// the edge's owner, `normal` points from minus to plus.
Vec2 gradient_flux(const TracePoint& minus, const TracePoint& plus, Vec2 normal, double h_e,
                   double beta0, double beta1);

/// Numerical flux for a test function, which lives in a single element:
/// the one-sided simplifications [v] = -v, {grad v} = grad v / 2 apply.
/// `normal` is outward from the element holding v.
///   baseline:     0
///   ddgic:        {grad v}
///   symmetric:    -beta0 v n / h_e + grad v / 2 - beta1 h_e (Hv n)
///   nonsymmetric: same as symmetric with beta0v in place of beta0
Vec2 test_flux(Variant variant, const TracePoint& v, Vec2 normal, double h_e, double beta0,
               double beta0v, double beta1);

} // namespace ddg2d
