#include "ddg2d/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ddg2d {

namespace {

struct Rule1D {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights; // sum to mu0
};

// Golub-Welsch for the Jacobi weight (1-x)^alpha (1+x)^beta on [-1,1].
Rule1D gauss_jacobi(int n, double alpha, double beta) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const double ab = alpha + beta;
        double diag;
        if (i == 0 && ab == 0.0) {
            diag = 0.0;
        } else {
            diag = (beta * beta - alpha * alpha) /
                   ((2.0 * i + ab) * (2.0 * i + ab + 2.0));
        }
        J(i, i) = diag;
        if (i >= 1) {
            const double k = static_cast<double>(i);
            const double num = 4.0 * k * (k + alpha) * (k + beta) * (k + ab);
            const double den = (2.0 * k + ab) * (2.0 * k + ab) *
                               (2.0 * k + ab + 1.0) * (2.0 * k + ab - 1.0);
            const double off = std::sqrt(num / den);
            J(i, i - 1) = off;
            J(i - 1, i) = off;
        }
    }

    // mu0 = int (1-x)^a (1+x)^b dx = 2^(a+b+1) B(a+1, b+1)
    const double mu0 = std::pow(2.0, alpha + beta + 1.0) *
                       std::exp(std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
                                std::lgamma(alpha + beta + 2.0));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    Rule1D rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v0 * v0;
    }
    return rule;
}

} // namespace

QuadratureRule volume_rule(int exactness) {
    if (exactness < 0 || exactness > 20)
        throw std::invalid_argument("volume_rule: exactness must be in [0, 20]");

    const int n = exactness / 2 + 1; // 2n-1 >= exactness
    const Rule1D gl = gauss_jacobi(n, 0.0, 0.0);
    const Rule1D gj = gauss_jacobi(n, 1.0, 0.0);

    QuadratureRule rule;
    rule.kind = QuadratureRule::Kind::volume;
    rule.exactness = exactness;
    rule.points.reserve(static_cast<std::size_t>(n) * n);
    rule.weights.reserve(static_cast<std::size_t>(n) * n);

    // Duffy map from [-1,1]^2: r = (1+e1)(1-e2)/4, s = (1+e2)/2,
    // dr ds = (1-e2)/8 de1 de2; the (1-e2) factor is the Jacobi weight.
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const double e1 = gl.nodes[i];
            const double e2 = gj.nodes[j];
            rule.points.push_back({0.25 * (1.0 + e1) * (1.0 - e2), 0.5 * (1.0 + e2)});
            rule.weights.push_back(gl.weights[i] * gj.weights[j] / 8.0);
        }
    }
    return rule;
}

QuadratureRule edge_rule(int exactness) {
    if (exactness < 0 || exactness > 20)
        throw std::invalid_argument("edge_rule: exactness must be in [0, 20]");

    const int n = exactness / 2 + 1;
    const Rule1D gl = gauss_jacobi(n, 0.0, 0.0);

    QuadratureRule rule;
    rule.kind = QuadratureRule::Kind::edge;
    rule.exactness = exactness;
    rule.points.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.points[i] = {0.5 * (1.0 + gl.nodes[i]), 0.0};
        rule.weights[i] = 0.5 * gl.weights[i];
    }
    return rule;
}

std::vector<Vec2> collapsed_sample_points(int n_per_direction) {
    const int n = n_per_direction;
    if (n < 1) throw std::invalid_argument("collapsed_sample_points: need n >= 1");
    const Rule1D gl = gauss_jacobi(n, 0.0, 0.0);
    const Rule1D gj = gauss_jacobi(n, 1.0, 0.0);
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            pts.push_back({0.25 * (1.0 + gl.nodes[i]) * (1.0 - gj.nodes[j]),
                           0.5 * (1.0 + gj.nodes[j])});
    return pts;
}

double min_volume_weight(const QuadratureRule& rule) {
    if (rule.kind != QuadratureRule::Kind::volume)
        throw std::invalid_argument("min_volume_weight: expected a volume rule");
    const double total = std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0);
    double wmin = rule.weights.front();
    for (double w : rule.weights) wmin = std::fmin(wmin, w);
    return wmin / total;
}

} // namespace ddg2d
