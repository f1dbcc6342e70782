#include "ddg2d/convergence.hpp"
#include "ddg2d/errors.hpp"
#include "ddg2d/export.hpp"
#include "ddg2d/runconfig.hpp"
#include "ddg2d/stability.hpp"
#include "ddg2d/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace ddg2d;

namespace {

struct CommonOpts {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string output_dir;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "Run configuration file (key = value lines)");
    cmd->add_option("--set", opts.overrides, "Override a config key, e.g. --set k=3")
        ->expected(-1);
    cmd->add_option("--output-dir", opts.output_dir, "Directory for output files");
}

RunConfig load_config(const CommonOpts& opts) {
    RunConfig cfg;
    if (!opts.config_path.empty()) cfg = RunConfig::from_file(opts.config_path);
    for (const std::string& kv : opts.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--set expects key=value, got: " + kv);
        cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (!opts.output_dir.empty()) cfg.output_dir = opts.output_dir;
    fs::create_directories(cfg.output_dir);
    return cfg;
}

void write_provenance(const RunConfig& cfg) {
    std::ofstream os(fs::path(cfg.output_dir) / "run_config.txt");
    os << cfg.echo();
}

int cmd_run(const CommonOpts& opts) {
    const RunConfig cfg = load_config(opts);
    write_provenance(cfg);

    const DiffusionModel model = cfg.make_model();
    const SchemeConfig scheme = cfg.make_scheme();
    const int n = cfg.levels.front();
    const int exactness = cfg.resolved_quadrature_exactness(model);

    Discretization disc(
        build_uniform_mesh(model.domain_origin, model.domain_length, n, model.boundary), cfg.k,
        exactness, exactness);
    DGField u = disc.project(model.initial_data);

    std::optional<LimiterConfig> lim;
    if (cfg.limiter_enabled(model) && model.solution_bounds)
        lim = LimiterConfig{model.solution_bounds->first, model.solution_bounds->second};

    TimeIntegrator integrator(disc, model, scheme, lim);
    const TimeConfig time = cfg.make_time_config(model);

    std::ofstream events(fs::path(cfg.output_dir) / "events.log");
    events.precision(12);
    const RunResult run = run_with_restart(integrator, u, time, &events);

    std::cout << "model=" << model.name << " variant=" << variant_name(scheme.variant)
              << " k=" << cfg.k << " n=" << n << "\n";
    std::cout << "steps=" << run.total_steps << " restarts=" << run.total_restarts
              << " final_time=" << run.final_time << "\n";
    if (run.blowup_declared) {
        std::cout << "blow-up declared at t=" << run.blowup_time << "\n";
        events << "blowup_declared t=" << run.blowup_time << '\n';
    }
    if (run.failed) {
        std::cerr << "run failed: " << run.message << "\n";
        return 1;
    }

    export_field_csv(disc, u, (fs::path(cfg.output_dir) / "field.csv").string(), 5);
    export_field_vtk(disc, u, (fs::path(cfg.output_dir) / "field.vtk").string(), 2 * cfg.k);
    write_mesh_csv(disc.mesh(), (fs::path(cfg.output_dir) / "mesh_vertices.csv").string(),
                   (fs::path(cfg.output_dir) / "mesh_elements.csv").string());

    if (model.has_exact()) {
        std::cout << "L2 error   = " << l2_error(disc, u, model.exact_solution, run.final_time)
                  << "\n";
        std::cout << "Linf error = " << linf_error(disc, u, model.exact_solution, run.final_time)
                  << "\n";
    }
    return 0;
}

int cmd_convergence(const CommonOpts& opts) {
    const RunConfig cfg = load_config(opts);
    write_provenance(cfg);

    const ErrorReport report = convergence_study(cfg);
    write_report_text(report, std::cout);
    {
        std::ofstream txt(fs::path(cfg.output_dir) / "report.txt");
        write_report_text(report, txt);
        std::ofstream csv(fs::path(cfg.output_dir) / "report.csv");
        write_report_csv(report, csv);
    }
    for (const LevelResult& lv : report.levels)
        if (lv.failed) return 1;
    return 0;
}

int cmd_stability(const CommonOpts& opts) {
    const RunConfig cfg = load_config(opts);
    const int n = cfg.levels.front();
    bool ok = true;
    for (const std::string& name : {std::string("heat"), std::string("anisotropic")}) {
        const DiffusionModel model = model_by_name(name, cfg.mu, cfg.gamma_exp);
        const SchemeConfig scheme = cfg.make_scheme();
        const StabilityProbeResult res = energy_monotonicity_probe(
            model, scheme, n, 20, 100, cfg.resolved_lambda(model), cfg.seed + 1);
        const bool semi_ok = res.worst_semidiscrete_ratio <= 1e-10;
        const bool step_ok = res.worst_step_energy_growth <= 1e-9;
        ok = ok && semi_ok && step_ok;
        std::cout << (semi_ok && step_ok ? "PASS" : "FAIL") << " " << name << " "
                  << variant_name(scheme.variant) << " k=" << cfg.k
                  << ": worst u.L(u)/|u|^2 = " << res.worst_semidiscrete_ratio
                  << ", worst per-step energy growth = " << res.worst_step_energy_growth << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_verify(std::uint64_t seed) {
    const std::vector<CheckResult> results = run_invariant_suite(seed);
    bool ok = true;
    for (const CheckResult& r : results) {
        ok = ok && r.passed;
        std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.name << ": worst " << r.worst
                  << " (tolerance " << r.tolerance << ")\n";
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Direct DG solvers for 2D nonlinear diffusion on triangular meshes"};
    app.require_subcommand(1);

    CommonOpts run_opts, conv_opts, stab_opts;
    std::uint64_t verify_seed = 12345;

    CLI::App* run = app.add_subcommand("run", "Single solve with field export and event log");
    add_common(run, run_opts);

    CLI::App* conv = app.add_subcommand("convergence", "Error/order table over mesh levels");
    add_common(conv, conv_opts);

    CLI::App* stab = app.add_subcommand("stability", "Energy-monotonicity property run");
    add_common(stab, stab_opts);

    CLI::App* verify = app.add_subcommand("verify", "Invariant suite");
    verify->add_option("--seed", verify_seed, "RNG seed for randomized checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(run_opts);
        if (conv->parsed()) return cmd_convergence(conv_opts);
        if (stab->parsed()) return cmd_stability(stab_opts);
        if (verify->parsed()) return cmd_verify(verify_seed);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
