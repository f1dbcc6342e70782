#include "ddg2d/quadrature.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

using namespace ddg2d;

TEST_CASE("volume rules: weights positive, sum to reference area") {
    for (int d : {0, 1, 2, 3, 5, 8, 9, 13, 17, 20}) {
        const QuadratureRule rule = volume_rule(d);
        double sum = 0.0;
        for (double w : rule.weights) {
            CHECK(w > 0.0);
            sum += w;
        }
        CHECK(std::fabs(sum - 0.5) <= 1e-14);
    }
}

TEST_CASE("volume rules integrate all monomials up to the stated degree") {
    for (int d : {0, 1, 2, 3, 5, 9, 13, 17}) {
        const QuadratureRule rule = volume_rule(d);
        for (int a = 0; a <= d; ++a) {
            for (int b = 0; a + b <= d; ++b) {
                double s = 0.0;
                for (int q = 0; q < rule.size(); ++q)
                    s += rule.weights[q] * std::pow(rule.points[q].x, a) *
                         std::pow(rule.points[q].y, b);
                const double ex = oracles::monomial_integral_tri(a, b);
                CHECK(std::fabs(s - ex) <= 1e-12 * ex);
            }
        }
    }
}

TEST_CASE("volume rule spot values") {
    const QuadratureRule r0 = volume_rule(0);
    double s = std::accumulate(r0.weights.begin(), r0.weights.end(), 0.0);
    CHECK(s == doctest::Approx(0.5).epsilon(1e-14)); // integral of 1

    const QuadratureRule r5 = volume_rule(5);
    double xxy = 0.0;
    for (int q = 0; q < r5.size(); ++q)
        xxy += r5.weights[q] * r5.points[q].x * r5.points[q].x * r5.points[q].y;
    CHECK(xxy == doctest::Approx(1.0 / 60.0).epsilon(1e-12));
}

TEST_CASE("degree-17 rule vs random polynomial monomial oracle") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    const QuadratureRule rule = volume_rule(17);
    double quad = 0.0, exact = 0.0;
    for (int a = 0; a <= 17; ++a) {
        for (int b = 0; a + b <= 17; ++b) {
            const double c = unif(rng);
            exact += c * oracles::monomial_integral_tri(a, b);
            double s = 0.0;
            for (int q = 0; q < rule.size(); ++q)
                s += rule.weights[q] * std::pow(rule.points[q].x, a) * std::pow(rule.points[q].y, b);
            quad += c * s;
        }
    }
    CHECK(std::fabs(quad - exact) <= 1e-11 * std::fabs(exact));
}

TEST_CASE("edge rules") {
    const QuadratureRule r1 = edge_rule(1);
    double s = 0.0;
    for (int q = 0; q < r1.size(); ++q) s += r1.weights[q] * r1.points[q].x;
    CHECK(s == doctest::Approx(0.5).epsilon(1e-14));

    const QuadratureRule r9 = edge_rule(9);
    double s9 = 0.0, wsum = 0.0;
    for (int q = 0; q < r9.size(); ++q) {
        s9 += r9.weights[q] * std::pow(r9.points[q].x, 9);
        wsum += r9.weights[q];
    }
    CHECK(std::fabs(s9 - 0.1) <= 1e-14);
    CHECK(std::fabs(wsum - 1.0) <= 1e-14);

    for (int d = 0; d <= 17; ++d) {
        const QuadratureRule r = edge_rule(d);
        for (int a = 0; a <= d; ++a) {
            double v = 0.0;
            for (int q = 0; q < r.size(); ++q) v += r.weights[q] * std::pow(r.points[q].x, a);
            CHECK(std::fabs(v - oracles::monomial_integral_edge(a)) <=
                  1e-12 * oracles::monomial_integral_edge(a));
        }
    }
}

TEST_CASE("min_volume_weight") {
    CHECK(min_volume_weight(volume_rule(0)) == doctest::Approx(1.0).epsilon(1e-14));

    const QuadratureRule r5 = volume_rule(5);
    double wmin = r5.weights[0], wsum = 0.0;
    for (double w : r5.weights) {
        wmin = std::fmin(wmin, w);
        wsum += w;
    }
    CHECK(min_volume_weight(r5) == doctest::Approx(wmin / wsum).epsilon(1e-14));

    for (int d : {0, 3, 9, 17}) {
        const double omega = min_volume_weight(volume_rule(d));
        CHECK(omega > 0.0);
        CHECK(omega <= 1.0);
    }

    CHECK_THROWS(volume_rule(21));
    CHECK_THROWS(volume_rule(-1));
}

TEST_CASE("collapsed sample points: 19x19 set has 361 interior points") {
    const auto pts = collapsed_sample_points(19);
    CHECK(pts.size() == 361);
    for (const Vec2& p : pts) {
        CHECK(p.x >= 0.0);
        CHECK(p.y >= 0.0);
        CHECK(p.x + p.y <= 1.0 + 1e-14);
    }
}
