#pragma once

#include "ddg2d/runconfig.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ddg2d {

struct LevelResult {
    int n = 0;          // elements per side
    double h = 0.0;     // grid spacing L / n
    double l2 = 0.0;
    double linf = 0.0;
    double l2_order = 0.0;   // vs previous level (0 for the first/failed)
    double linf_order = 0.0;
    long steps = 0;
    double seconds = 0.0;
    bool failed = false;
    std::string message;
};

struct ErrorReport {
    RunConfig config;
    std::vector<LevelResult> levels;
};

/// Runs each mesh level to T and collects both error norms and the
/// observed orders between consecutive levels. A solver failure on one
/// level is recorded without aborting the others.
ErrorReport convergence_study(const RunConfig& config);

/// Paper-style aligned table: one row per level, error and order columns.
void write_report_text(const ErrorReport& report, std::ostream& os);
void write_report_csv(const ErrorReport& report, std::ostream& os);

} // namespace ddg2d
