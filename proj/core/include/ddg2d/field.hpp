#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace ddg2d {

/// Modal coefficients of a piecewise polynomial, element-major. With the
/// orthonormal basis the cell average of element e is coeff[e*n_dof] times
/// the constant basis value sqrt(2).
struct DGField {
    int n_elements = 0;
    int n_dof = 1;
    double time = 0.0;
    std::vector<double> coeff;

    DGField() = default;
    DGField(int elements, int dofs)
        : n_elements(elements), n_dof(dofs),
          coeff(static_cast<std::size_t>(elements) * dofs, 0.0) {}

    std::span<double> element(int e) {
        return {coeff.data() + static_cast<std::size_t>(e) * n_dof, static_cast<std::size_t>(n_dof)};
    }
    std::span<const double> element(int e) const {
        return {coeff.data() + static_cast<std::size_t>(e) * n_dof, static_cast<std::size_t>(n_dof)};
    }

    double cell_average(int e) const {
        return coeff[static_cast<std::size_t>(e) * n_dof] * std::numbers::sqrt2;
    }

    bool all_finite() const {
        for (double c : coeff)
            if (!std::isfinite(c)) return false;
        return true;
    }
};

} // namespace ddg2d
