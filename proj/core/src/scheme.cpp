#include "ddg2d/scheme.hpp"

#include <stdexcept>

namespace ddg2d {

Variant variant_by_name(const std::string& name) {
    if (name == "baseline") return Variant::baseline;
    if (name == "ddgic") return Variant::ddgic;
    if (name == "symmetric") return Variant::symmetric;
    if (name == "nonsymmetric") return Variant::nonsymmetric;
    throw std::invalid_argument("unknown variant: " + name);
}

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::baseline: return "baseline";
        case Variant::ddgic: return "ddgic";
        case Variant::symmetric: return "symmetric";
        case Variant::nonsymmetric: return "nonsymmetric";
    }
    return "?";
}

SchemeConfig SchemeConfig::defaults(Variant variant, int k) {
    SchemeConfig cfg;
    cfg.variant = variant;
    cfg.k = k;
    if (k >= 1) {
        cfg.beta0 = (k + 1.0) * (k + 1.0);
        cfg.beta1 = 1.0 / (2.0 * k * (k + 1.0));
    } else {
        cfg.beta0 = 1.0;
        cfg.beta1 = 0.0;
    }
    cfg.beta0v = 0.5 * cfg.beta0;
    return cfg;
}

Vec2 direction_vector(const DiffusionModel& model, double u_avg, Vec2 normal) {
    return model.A(u_avg).apply_transpose(normal);
}

Vec2 gradient_flux(const TracePoint& minus, const TracePoint& plus, Vec2 n, double h_e,
                   double beta0, double beta1) {
    const double ju = plus.u - minus.u;
    const double pen = beta0 * ju / h_e;
    // Jumps of the Hessian contracted with the (fixed) normal.
    const double jhn_x = (plus.hess.xx - minus.hess.xx) * n.x + (plus.hess.xy - minus.hess.xy) * n.y;
    const double jhn_y = (plus.hess.xy - minus.hess.xy) * n.x + (plus.hess.yy - minus.hess.yy) * n.y;
    return {pen * n.x + 0.5 * (plus.grad.x + minus.grad.x) + beta1 * h_e * jhn_x,
            pen * n.y + 0.5 * (plus.grad.y + minus.grad.y) + beta1 * h_e * jhn_y};
}

Vec2 test_flux(Variant variant, const TracePoint& v, Vec2 n, double h_e, double beta0,
               double beta0v, double beta1) {
    switch (variant) {
        case Variant::baseline:
            return {0.0, 0.0};
        case Variant::ddgic:
            return 0.5 * v.grad;
        case Variant::symmetric:
        case Variant::nonsymmetric: {
            const double b0 = variant == Variant::symmetric ? beta0 : beta0v;
            const double pen = -b0 * v.u / h_e;
            const double hn_x = v.hess.xx * n.x + v.hess.xy * n.y;
            const double hn_y = v.hess.xy * n.x + v.hess.yy * n.y;
            return {pen * n.x + 0.5 * v.grad.x - beta1 * h_e * hn_x,
                    pen * n.y + 0.5 * v.grad.y - beta1 * h_e * hn_y};
        }
    }
    return {0.0, 0.0};
}

} // namespace ddg2d
