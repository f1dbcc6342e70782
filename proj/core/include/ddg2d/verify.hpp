#pragma once

#include "ddg2d/assembly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ddg2d {

/// Slow reference residual: element-by-element evaluation of the weak form
/// with direct basis evaluation at freshly computed trace coordinates and
/// the flux formulas written out inline. Shares no code path with
/// assemble_residual beyond the basis coefficient tables; used to
/// cross-check the fast assembly.
DGField reference_residual(const Discretization& disc, const DiffusionModel& model,
                           const SchemeConfig& scheme, const DGField& u, double t);

struct CheckResult {
    std::string name;
    bool passed = false;
    double worst = 0.0;     // worst observed deviation
    double tolerance = 0.0;
    std::string detail;
};

/// The invariant suite behind the `verify` subcommand: quadrature
/// exactness against closed-form monomial integrals, basis orthonormality,
/// limiter conservation and bound enforcement, the adjoint identity
/// A({u}) ghat . n = ghat . xi({u}), flux consistency on continuous
/// polynomial fields, the zero residual on constant fields, and the
/// brute-force residual cross-check on a two-element mesh.
std::vector<CheckResult> run_invariant_suite(std::uint64_t seed = 12345);

} // namespace ddg2d
