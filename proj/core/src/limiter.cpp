#include "ddg2d/limiter.hpp"

#include <algorithm>
#include <cmath>

namespace ddg2d {

LimiterReport apply_scaling_limiter(const Discretization& disc, DGField& u,
                                    const LimiterConfig& config) {
    LimiterReport report;
    const int ndof = u.n_dof;
    const int nsamp = disc.n_samples();
    const auto& phis = disc.phi_samples();
    const double m = config.lower, M = config.upper;
    const double avg_slack = 1e-12 * std::fmax(1.0, std::fmax(std::fabs(m) == HUGE_VAL ? 0.0 : std::fabs(m),
                                                              std::fabs(M) == HUGE_VAL ? 0.0 : std::fabs(M)));

    for (int e = 0; e < u.n_elements; ++e) {
        auto c = u.element(e);
        const double ubar = u.cell_average(e);

        if (ubar < m - avg_slack || ubar > M + avg_slack) {
            report.average_violations.push_back(e);
            continue;
        }

        if (ndof == 1) continue; // constants are their own average

        double umin = HUGE_VAL, umax = -HUGE_VAL;
        for (int p = 0; p < nsamp; ++p) {
            double v = 0.0;
            const double* ph = phis.data() + static_cast<std::size_t>(p) * ndof;
            for (int j = 0; j < ndof; ++j) v += c[j] * ph[j];
            umin = std::fmin(umin, v);
            umax = std::fmax(umax, v);
        }

        // Trigger slack keeps the limiter idempotent: a limited element
        // whose extrema sit at the bounds up to re-evaluation rounding is
        // left alone. Stays well below the 1e-12 enforcement tolerance.
        const double trig =
            1e-13 * std::fmax(1.0, std::fmax(std::fabs(umin), std::fabs(umax)));

        double theta = 1.0;
        if (umax > M + trig) theta = std::fmin(theta, (M - ubar) / (umax - ubar));
        if (umin < m - trig) theta = std::fmin(theta, (ubar - m) / (ubar - umin));
        theta = std::clamp(theta, 0.0, 1.0);
        if (theta < 1.0)
            for (int j = 1; j < ndof; ++j) c[j] *= theta;
    }
    return report;
}

} // namespace ddg2d
