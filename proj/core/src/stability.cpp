#include "ddg2d/stability.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace ddg2d {

StabilityProbeResult energy_monotonicity_probe(const DiffusionModel& model,
                                               const SchemeConfig& scheme, int n_per_side,
                                               int trials, int steps, double lambda,
                                               std::uint64_t seed) {
    const int exactness = 2 * scheme.k + 1;
    Discretization disc(
        build_uniform_mesh(model.domain_origin, model.domain_length, n_per_side,
                           BoundaryKind::periodic),
        scheme.k, exactness, exactness);
    TimeIntegrator integrator(disc, model, scheme);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);

    StabilityProbeResult result;
    result.trials = trials;
    result.steps_per_trial = steps;
    result.worst_semidiscrete_ratio = -HUGE_VAL;
    result.worst_step_energy_growth = -HUGE_VAL;

    for (int trial = 0; trial < trials; ++trial) {
        DGField u(disc.mesh().n_elements(), disc.n_dof());
        for (double& c : u.coeff) c = unif(rng);

        DGField rate;
        if (!assemble_residual(disc, model, scheme, u, 0.0, rate))
            throw std::runtime_error("energy_monotonicity_probe: non-finite residual");
        result.worst_semidiscrete_ratio = std::fmax(
            result.worst_semidiscrete_ratio, inner_product(disc, u, rate) / energy(disc, u));

        double prev = energy(disc, u);
        double t = 0.0;
        for (int s = 0; s < steps; ++s) {
            const double dt = compute_dt(disc, model, u, disc.omega(), lambda,
                                         CflMode::standard);
            if (integrator.step(u, t, dt) != StepStatus::ok)
                throw std::runtime_error("energy_monotonicity_probe: step failed");
            t += dt;
            const double next = energy(disc, u);
            result.worst_step_energy_growth =
                std::fmax(result.worst_step_energy_growth, (next - prev) / prev);
            prev = next;
        }
    }
    return result;
}

} // namespace ddg2d
