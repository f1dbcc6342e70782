#include "ddg2d/convergence.hpp"

#include "ddg2d/errors.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>

namespace ddg2d {

ErrorReport convergence_study(const RunConfig& config) {
    ErrorReport report;
    report.config = config;

    const DiffusionModel model = config.make_model();
    const SchemeConfig scheme = config.make_scheme();
    const int exactness = config.resolved_quadrature_exactness(model);
    const TimeConfig time = config.make_time_config(model);

    for (int n : config.levels) {
        LevelResult level;
        level.n = n;
        level.h = model.domain_length / n;
        const auto start = std::chrono::steady_clock::now();
        try {
            Mesh mesh = build_uniform_mesh(model.domain_origin, model.domain_length, n,
                                           model.boundary);
            Discretization disc(std::move(mesh), config.k, exactness, exactness);
            DGField u = disc.project(model.initial_data);

            std::optional<LimiterConfig> lim;
            if (config.limiter_enabled(model) && model.solution_bounds)
                lim = LimiterConfig{model.solution_bounds->first, model.solution_bounds->second};

            TimeIntegrator integrator(disc, model, scheme, lim);
            const RunResult run = run_with_restart(integrator, u, time);
            level.steps = run.total_steps;
            if (run.failed) {
                level.failed = true;
                level.message = run.message;
            } else if (!model.has_exact()) {
                level.failed = true;
                level.message = "model has no exact solution";
            } else {
                level.l2 = l2_error(disc, u, model.exact_solution, run.final_time);
                level.linf = linf_error(disc, u, model.exact_solution, run.final_time);
            }
        } catch (const std::exception& ex) {
            level.failed = true;
            level.message = ex.what();
        }
        level.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.levels.push_back(level);
    }

    // Orders between consecutive levels of ratio two.
    for (std::size_t i = 1; i < report.levels.size(); ++i) {
        LevelResult& fine = report.levels[i];
        const LevelResult& coarse = report.levels[i - 1];
        if (fine.failed || coarse.failed || fine.n != 2 * coarse.n) continue;
        fine.l2_order = order_between(coarse.l2, fine.l2);
        fine.linf_order = order_between(coarse.linf, fine.linf);
    }
    return report;
}

void write_report_text(const ErrorReport& report, std::ostream& os) {
    os << "# model=" << report.config.model << " variant=" << report.config.variant
       << " k=" << report.config.k << "\n";
    os << std::setw(6) << "n" << std::setw(12) << "h" << std::setw(14) << "L2" << std::setw(8)
       << "order" << std::setw(14) << "Linf" << std::setw(8) << "order" << std::setw(10)
       << "steps" << std::setw(10) << "sec" << "\n";
    for (const LevelResult& lv : report.levels) {
        if (lv.failed) {
            os << std::setw(6) << lv.n << "  FAILED: " << lv.message << "\n";
            continue;
        }
        os << std::setw(6) << lv.n << std::setw(12) << std::scientific << std::setprecision(3)
           << lv.h << std::setw(14) << std::setprecision(3) << lv.l2 << std::setw(8)
           << std::fixed << std::setprecision(2) << (lv.l2_order != 0.0 ? lv.l2_order : 0.0)
           << std::setw(14) << std::scientific << std::setprecision(3) << lv.linf << std::setw(8)
           << std::fixed << std::setprecision(2) << lv.linf_order << std::setw(10) << lv.steps
           << std::setw(10) << std::setprecision(1) << lv.seconds << "\n";
    }
    os.unsetf(std::ios::floatfield);
}

void write_report_csv(const ErrorReport& report, std::ostream& os) {
    os << "n,h,l2,l2_order,linf,linf_order,steps,seconds,failed\n";
    os.precision(17);
    for (const LevelResult& lv : report.levels) {
        os << lv.n << ',' << lv.h << ',' << lv.l2 << ',' << lv.l2_order << ',' << lv.linf << ','
           << lv.linf_order << ',' << lv.steps << ',' << lv.seconds << ',' << (lv.failed ? 1 : 0)
           << '\n';
    }
}

} // namespace ddg2d
