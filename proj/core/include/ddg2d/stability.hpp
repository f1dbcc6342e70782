#pragma once

#include "ddg2d/scheme.hpp"
#include "ddg2d/timestep.hpp"

#include <cstdint>

namespace ddg2d {

struct StabilityProbeResult {
    int trials = 0;
    int steps_per_trial = 0;
    /// max over trials of integral(u L(u)) / integral(u^2) at t = 0.
    double worst_semidiscrete_ratio = 0.0;
    /// max over trials and steps of (E_next - E_prev) / E_prev.
    double worst_step_energy_growth = 0.0;
};

/// Energy-monotonicity probe: random discontinuous coefficient fields on an
/// n x n periodic mesh, advanced with the CFL step for a fixed number of
/// SSP-RK3 steps. Records the worst semi-discrete energy rate and the worst
/// per-step discrete energy growth.
StabilityProbeResult energy_monotonicity_probe(const DiffusionModel& model,
                                               const SchemeConfig& scheme, int n_per_side,
                                               int trials, int steps, double lambda,
                                               std::uint64_t seed);

} // namespace ddg2d
