#pragma once

#include "ddg2d/models.hpp"
#include "ddg2d/scheme.hpp"
#include "ddg2d/timestep.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ddg2d {

/// Declarative run configuration: `key = value` lines, '#' comments.
/// Unset keys fall back to the selected model's canonical parameters.
/// Echoed verbatim into outputs for provenance.
struct RunConfig {
    std::string model = "heat";
    double mu = 0.01;
    double gamma_exp = 3.0;

    std::string variant = "ddgic";
    int k = 2;
    std::vector<int> levels = {5, 10, 20};

    // Negative values mean "model / scheme default".
    double lambda = -1.0;
    double T = -1.0;
    int quadrature_exactness = -1; // -1: 2k+1, or 4k+1 for strongly-nonlinear models
    double beta0 = -1.0;
    double beta0v = -1.0;
    double beta1 = -1.0;

    int limiter = -1; // -1: model default, 0: off, 1: on
    bool restart = false;
    std::string cfl_mode = "standard"; // standard | blowup
    double dt_floor = 1e-13;
    double safety = 1.0;
    long log_every = 0;

    std::string output_dir = ".";
    std::uint64_t seed = 0;

    static RunConfig from_file(const std::string& path);
    static RunConfig from_stream(std::istream& in);
    void set(const std::string& key, const std::string& value);

    /// The configuration as `key = value` lines (all keys, resolved or not).
    std::string echo() const;

    // Resolved pieces.
    DiffusionModel make_model() const;
    SchemeConfig make_scheme() const;
    int resolved_quadrature_exactness(const DiffusionModel& m) const;
    double resolved_lambda(const DiffusionModel& m) const;
    double resolved_T(const DiffusionModel& m) const;
    bool limiter_enabled(const DiffusionModel& m) const;
    TimeConfig make_time_config(const DiffusionModel& m) const;
};

} // namespace ddg2d
