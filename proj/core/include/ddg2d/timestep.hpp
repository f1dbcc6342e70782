#pragma once

#include "ddg2d/assembly.hpp"
#include "ddg2d/discretization.hpp"
#include "ddg2d/field.hpp"
#include "ddg2d/limiter.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <vector>

namespace ddg2d {

enum class CflMode { standard, blowup };

struct TimeConfig {
    double lambda = 0.1;
    double T = 1.0;
    CflMode cfl_mode = CflMode::standard;
    bool restart_enabled = false;
    double dt_floor = 1e-13;
    double safety = 1.0;
    /// Emit an event-log record every `log_every` accepted steps (plus all
    /// restarts and the final state). 0 keeps only restarts and endpoints.
    long log_every = 0;
};

/// CFL time step:
///   standard: dt = safety * omega * lambda * min_K h_K^2 / mu_eff, with
///     mu_eff = gamma_star over the currently attained solution range;
///   blowup:   dt = safety * min(omega lambda, 1 / max_K ubar_K)
///                  * min_K h_K^2 / mu, with mu the model's base constant.
double compute_dt(const Discretization& disc, const DiffusionModel& model, const DGField& u,
                  double omega, double lambda, CflMode mode, double safety = 1.0);

enum class StepStatus { ok, nonfinite, bound_violation };

/// One Shu-Osher SSP-RK3 step of du/dt = L(u, t) on a coefficient vector:
///   u1 = u + dt L(u, t)
///   u2 = 3/4 u + 1/4 (u1 + dt L(u1, t + dt))
///   u  = 1/3 u + 2/3 (u2 + dt L(u2, t + dt/2))
/// `post_stage`, when provided, runs after every stage (the limiter) and
/// may reject the stage by returning false.
StepStatus ssp_rk3_step(
    std::vector<double>& u, double t, double dt,
    const std::function<bool(const std::vector<double>&, double, std::vector<double>&)>& rhs,
    const std::function<bool(std::vector<double>&)>& post_stage = {});

/// DDG time integrator: SSP-RK3 over the semi-discrete residual with an
/// optional per-stage scaling limiter.
class TimeIntegrator {
public:
    TimeIntegrator(const Discretization& disc, const DiffusionModel& model, SchemeConfig scheme,
                   std::optional<LimiterConfig> limiter = {});

    StepStatus step(DGField& u, double t, double dt);

    const Discretization& disc() const { return disc_; }
    const DiffusionModel& model() const { return model_; }
    const SchemeConfig& scheme() const { return scheme_; }
    const std::optional<LimiterConfig>& limiter() const { return limiter_; }

private:
    const Discretization& disc_;
    const DiffusionModel& model_;
    SchemeConfig scheme_;
    std::optional<LimiterConfig> limiter_;
    DGField stage_;
    DGField rate_;
};

struct StepRecord {
    long step = 0;
    double t = 0.0;
    double dt = 0.0;
    int restarts = 0; // restarts consumed while producing this step
    double min_avg = 0.0;
    double max_avg = 0.0;
};

struct RunResult {
    double final_time = 0.0;
    long total_steps = 0;
    long total_restarts = 0;
    bool blowup_declared = false;
    double blowup_time = 0.0;
    bool failed = false; // non-finite/bound failure with restarts disabled
    std::string message;
    std::vector<StepRecord> log;
};

using StepFn = std::function<StepStatus(DGField&, double t, double dt)>;
using DtFn = std::function<double(const DGField&, double t)>;

/// Advance to config.T. On a rejected step (non-finite values or a cell
/// average outside the limiter bounds) with restarts enabled, the step is
/// discarded and retried with dt/2; when dt falls below config.dt_floor or
/// no longer advances t, the run stops and declares blow-up at the current
/// time. The final step is shortened to land on T exactly.
RunResult run_with_restart(const StepFn& step, const DtFn& dt_provider, DGField& u,
                           const TimeConfig& config, std::ostream* event_log = nullptr);

/// Same, with the step and CFL rule taken from a TimeIntegrator.
RunResult run_with_restart(TimeIntegrator& integrator, DGField& u, const TimeConfig& config,
                           std::ostream* event_log = nullptr);

} // namespace ddg2d
