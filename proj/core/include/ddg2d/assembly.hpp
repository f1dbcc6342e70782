#pragma once

#include "ddg2d/discretization.hpp"
#include "ddg2d/field.hpp"
#include "ddg2d/models.hpp"
#include "ddg2d/scheme.hpp"

namespace ddg2d {

/// Semi-discrete residual: fills dudt with L(u) such that the weak form
/// holds for every test basis function. Edge integrals are evaluated once
/// per edge and scattered to both incident elements. Dirichlet boundaries
/// use the mirrored exterior trace u+ = 2g - u- with interior gradient and
/// second derivatives.
///
/// Returns false when a non-finite value is produced (overflow in blow-up
/// runs); dudt contents are then unspecified.
bool assemble_residual(const Discretization& disc, const DiffusionModel& model,
                       const SchemeConfig& scheme, const DGField& u, double t, DGField& dudt);

/// Integral of u over the whole domain.
double total_mass(const Discretization& disc, const DGField& u);

/// Integral of u^2 over the whole domain (discrete energy).
double energy(const Discretization& disc, const DGField& u);

/// Integral of u * w over the whole domain; energy rate when w = L(u).
double inner_product(const Discretization& disc, const DGField& u, const DGField& w);

} // namespace ddg2d
