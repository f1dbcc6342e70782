#include "ddg2d/timestep.hpp"

#include <algorithm>
#include <cmath>

namespace ddg2d {

namespace {

std::pair<double, double> average_range(const DGField& u) {
    double lo = HUGE_VAL, hi = -HUGE_VAL;
    for (int e = 0; e < u.n_elements; ++e) {
        const double a = u.cell_average(e);
        lo = std::fmin(lo, a);
        hi = std::fmax(hi, a);
    }
    return {lo, hi};
}

} // namespace

double compute_dt(const Discretization& disc, const DiffusionModel& model, const DGField& u,
                  double omega, double lambda, CflMode mode, double safety) {
    const double hmin = disc.mesh().min_h();
    const auto [lo, hi] = average_range(u);

    if (mode == CflMode::blowup) {
        const double cap = hi > 0.0 ? 1.0 / hi : HUGE_VAL;
        return safety * std::fmin(omega * lambda, cap) * hmin * hmin / model.mu_ref;
    }

    const double mu_eff = std::fmax(model.gamma_star_on_range(lo, hi), 1e-300);
    return safety * omega * lambda * hmin * hmin / mu_eff;
}

StepStatus ssp_rk3_step(
    std::vector<double>& u, double t, double dt,
    const std::function<bool(const std::vector<double>&, double, std::vector<double>&)>& rhs,
    const std::function<bool(std::vector<double>&)>& post_stage) {
    const std::size_t n = u.size();
    std::vector<double> k(n), s(n);

    auto apply_post = [&](std::vector<double>& v) {
        return !post_stage || post_stage(v);
    };

    if (!rhs(u, t, k)) return StepStatus::nonfinite;
    for (std::size_t i = 0; i < n; ++i) s[i] = u[i] + dt * k[i];
    if (!apply_post(s)) return StepStatus::bound_violation;

    if (!rhs(s, t + dt, k)) return StepStatus::nonfinite;
    for (std::size_t i = 0; i < n; ++i) s[i] = 0.75 * u[i] + 0.25 * (s[i] + dt * k[i]);
    if (!apply_post(s)) return StepStatus::bound_violation;

    if (!rhs(s, t + 0.5 * dt, k)) return StepStatus::nonfinite;
    for (std::size_t i = 0; i < n; ++i) s[i] = u[i] / 3.0 + (2.0 / 3.0) * (s[i] + dt * k[i]);
    if (!apply_post(s)) return StepStatus::bound_violation;

    u = std::move(s);
    return StepStatus::ok;
}

TimeIntegrator::TimeIntegrator(const Discretization& disc, const DiffusionModel& model,
                               SchemeConfig scheme, std::optional<LimiterConfig> limiter)
    : disc_(disc), model_(model), scheme_(scheme), limiter_(std::move(limiter)),
      stage_(disc.mesh().n_elements(), disc.n_dof()), rate_(disc.mesh().n_elements(), disc.n_dof()) {}

StepStatus TimeIntegrator::step(DGField& u, double t, double dt) {
    auto rhs = [&](const std::vector<double>& v, double tt, std::vector<double>& out) {
        stage_.coeff = v; // reuse field wrappers around raw coefficients
        stage_.time = tt;
        const bool ok = assemble_residual(disc_, model_, scheme_, stage_, tt, rate_);
        out = rate_.coeff;
        return ok;
    };
    std::function<bool(std::vector<double>&)> post;
    if (limiter_) {
        post = [&](std::vector<double>& v) {
            stage_.coeff = std::move(v);
            const LimiterReport rep = apply_scaling_limiter(disc_, stage_, *limiter_);
            v = std::move(stage_.coeff);
            return rep.ok();
        };
    }
    std::vector<double> c = std::move(u.coeff);
    const StepStatus status = ssp_rk3_step(c, t, dt, rhs, post);
    u.coeff = std::move(c);
    if (status == StepStatus::ok) {
        u.time = t + dt;
        if (!u.all_finite()) return StepStatus::nonfinite;
    }
    return status;
}

RunResult run_with_restart(const StepFn& step_fn, const DtFn& dt_provider, DGField& u,
                           const TimeConfig& config, std::ostream* event_log) {
    RunResult result;
    const double T = config.T;

    auto emit = [&](const StepRecord& rec, const char* tag) {
        result.log.push_back(rec);
        if (event_log) {
            (*event_log) << tag << " step=" << rec.step << " t=" << rec.t << " dt=" << rec.dt
                         << " restarts=" << rec.restarts << " min_avg=" << rec.min_avg
                         << " max_avg=" << rec.max_avg << '\n';
        }
    };

    double t = 0.0;
    long step = 0;
    while (t < T) {
        double dt = dt_provider(u, t);
        bool final_step = false;
        if (t + dt >= T) {
            dt = T - t;
            final_step = true;
        }

        int restarts = 0;
        StepStatus status;
        DGField backup = u;
        while (true) {
            status = step_fn(u, t, dt);
            if (status == StepStatus::ok) break;

            u = backup; // discard the rejected step
            if (!config.restart_enabled) {
                result.failed = true;
                result.message = status == StepStatus::nonfinite
                                     ? "non-finite values in residual"
                                     : "cell average left the limiter bounds";
                result.final_time = t;
                result.total_steps = step;
                if (event_log) (*event_log) << "abort t=" << t << " : " << result.message << '\n';
                return result;
            }

            dt *= 0.5;
            final_step = false;
            ++restarts;
            ++result.total_restarts;
            if (event_log)
                (*event_log) << "restart step=" << step << " t=" << t << " dt=" << dt << '\n';
            if (dt < config.dt_floor || t + dt == t) {
                result.blowup_declared = true;
                result.blowup_time = t;
                result.final_time = t;
                result.total_steps = step;
                StepRecord rec;
                rec.step = step;
                rec.t = t;
                rec.dt = dt;
                rec.restarts = restarts;
                const auto [lo, hi] = average_range(u);
                rec.min_avg = lo;
                rec.max_avg = hi;
                emit(rec, "blowup");
                return result;
            }
        }

        t = final_step ? T : t + dt;
        u.time = t;
        ++step;

        const bool want_log = restarts > 0 || final_step ||
                              (config.log_every > 0 && step % config.log_every == 0);
        if (want_log) {
            StepRecord rec;
            rec.step = step;
            rec.t = t;
            rec.dt = dt;
            rec.restarts = restarts;
            const auto [lo, hi] = average_range(u);
            rec.min_avg = lo;
            rec.max_avg = hi;
            emit(rec, "step");
        }
    }

    result.final_time = t;
    result.total_steps = step;
    return result;
}

RunResult run_with_restart(TimeIntegrator& integrator, DGField& u, const TimeConfig& config,
                           std::ostream* event_log) {
    const double omega = integrator.disc().omega();
    const StepFn step = [&](DGField& v, double t, double dt) { return integrator.step(v, t, dt); };
    const DtFn dt_provider = [&](const DGField& v, double) {
        return compute_dt(integrator.disc(), integrator.model(), v, omega, config.lambda,
                          config.cfl_mode, config.safety);
    };
    return run_with_restart(step, dt_provider, u, config, event_log);
}

} // namespace ddg2d
