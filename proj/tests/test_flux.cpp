#include "ddg2d/scheme.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace ddg2d;
using oracles::Poly2D;

TEST_CASE("scheme config defaults and sigma") {
    const SchemeConfig c2 = SchemeConfig::defaults(Variant::ddgic, 2);
    CHECK(c2.beta0 == doctest::Approx(9.0));
    CHECK(c2.beta0v == doctest::Approx(4.5));
    CHECK(c2.beta1 == doctest::Approx(1.0 / 12.0));
    CHECK(c2.sigma() == 1);

    CHECK(SchemeConfig::defaults(Variant::baseline, 3).sigma() == 0);
    CHECK(SchemeConfig::defaults(Variant::symmetric, 3).sigma() == 1);
    CHECK(SchemeConfig::defaults(Variant::nonsymmetric, 3).sigma() == -1);

    const SchemeConfig c0 = SchemeConfig::defaults(Variant::ddgic, 0);
    CHECK(c0.beta0 == doctest::Approx(1.0));
    CHECK(c0.beta1 == 0.0);

    CHECK(variant_by_name("nonsymmetric") == Variant::nonsymmetric);
    CHECK_THROWS(variant_by_name("bogus"));
}

TEST_CASE("direction vector") {
    const DiffusionModel heat = heat_model(0.7);
    const Vec2 n{0.6, 0.8};
    const Vec2 xi = direction_vector(heat, 1.23, n);
    CHECK(xi.x == doctest::Approx(0.7 * 0.6).epsilon(1e-14));
    CHECK(xi.y == doctest::Approx(0.7 * 0.8).epsilon(1e-14));

    const DiffusionModel aniso = anisotropic_model(1.0);
    const Vec2 xi2 = direction_vector(aniso, 0.0, {1.0, 0.0});
    CHECK(xi2.x == doctest::Approx(2.0).epsilon(1e-14)); // transpose rows become columns
    CHECK(xi2.y == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("jump and average reconstruct the traces") {
    const double um = 0.3, up = -1.7;
    const double j = jump(um, up), a = average(um, up);
    CHECK(a + 0.5 * j == doctest::Approx(up).epsilon(1e-15));
    CHECK(a - 0.5 * j == doctest::Approx(um).epsilon(1e-15));
}

TEST_CASE("gradient flux") {
    SUBCASE("continuous linear field gives the exact gradient") {
        TracePoint tp;
        tp.u = 0.42;
        tp.grad = {1.0, 1.0};
        const Vec2 f = gradient_flux(tp, tp, {0.0, 1.0}, 0.25, 9.0, 1.0 / 12.0);
        CHECK(f.x == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(f.y == doctest::Approx(1.0).epsilon(1e-15));
    }

    SUBCASE("pure jump") {
        TracePoint um, up;
        um.u = 0.0;
        up.u = 1.0;
        const Vec2 f = gradient_flux(um, up, {1.0, 0.0}, 0.1, 9.0, 1.0 / 12.0);
        CHECK(f.x == doctest::Approx(90.0).epsilon(1e-14));
        CHECK(f.y == doctest::Approx(0.0));
    }

    SUBCASE("one-sided quadratic vs symbolic oracle") {
        // u- = x^2 on the owner side, u+ = 0, n = (1,0), evaluated at x = 0.
        const Poly2D uminus = Poly2D::monomial(2, 0);
        const Poly2D uplus; // zero
        const double x = 0.0, y = 0.37;
        auto trace_of = [&](const Poly2D& p) {
            TracePoint tp;
            tp.u = p.eval(x, y);
            tp.grad = {p.dx().eval(x, y), p.dy().eval(x, y)};
            tp.hess = {p.dx().dx().eval(x, y), p.dx().dy().eval(x, y), p.dy().dy().eval(x, y)};
            return tp;
        };
        const TracePoint tm = trace_of(uminus), tp = trace_of(uplus);
        const double h_e = 0.2, beta0 = 9.0, beta1 = 1.0 / 12.0;
        const Vec2 n{1.0, 0.0};
        const Vec2 f = gradient_flux(tm, tp, n, h_e, beta0, beta1);

        // Oracle: assemble the formula from the symbolic pieces directly.
        const double ju = tp.u - tm.u;
        const double jhx = (tp.hess.xx - tm.hess.xx) * n.x + (tp.hess.xy - tm.hess.xy) * n.y;
        const double expect_x = beta0 * ju / h_e * n.x + 0.5 * (tp.grad.x + tm.grad.x) +
                                beta1 * h_e * jhx;
        CHECK(std::fabs(f.x - expect_x) <= 1e-13);
        CHECK(std::fabs(f.x - (-2.0 * beta1 * h_e)) <= 1e-13); // closed form
        CHECK(std::fabs(f.y) <= 1e-15);
    }
}

TEST_CASE("test-function flux") {
    TracePoint v;
    v.u = 1.0;
    v.grad = {2.0, 4.0};

    SUBCASE("baseline vanishes") {
        const Vec2 f = test_flux(Variant::baseline, v, {0.0, 1.0}, 0.5, 4.0, 2.0, 0.1);
        CHECK(f.x == 0.0);
        CHECK(f.y == 0.0);
    }

    SUBCASE("ddgic is half the one-sided gradient") {
        const Vec2 f = test_flux(Variant::ddgic, v, {0.0, 1.0}, 0.5, 4.0, 2.0, 0.1);
        CHECK(f.x == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(f.y == doctest::Approx(2.0).epsilon(1e-15));
    }

    SUBCASE("symmetric penalty term") {
        TracePoint w;
        w.u = 1.0; // grad and hessian zero
        const Vec2 f = test_flux(Variant::symmetric, w, {0.0, 1.0}, 0.5, 4.0, 2.0, 0.1);
        CHECK(f.x == doctest::Approx(0.0));
        CHECK(f.y == doctest::Approx(-8.0).epsilon(1e-14));
    }

    SUBCASE("nonsymmetric with beta0v = beta0 equals symmetric") {
        std::mt19937_64 rng(47);
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        for (int it = 0; it < 50; ++it) {
            TracePoint w{unif(rng), {unif(rng), unif(rng)}, {unif(rng), unif(rng), unif(rng)}};
            const double ang = 3.1 * unif(rng);
            const Vec2 n{std::cos(ang), std::sin(ang)};
            const double he = 0.1 + 0.4 * std::fabs(unif(rng));
            const double b0 = 1.0 + 8.0 * std::fabs(unif(rng));
            const Vec2 fs = test_flux(Variant::symmetric, w, n, he, b0, 12345.0, 0.08);
            const Vec2 fn = test_flux(Variant::nonsymmetric, w, n, he, 54321.0, b0, 0.08);
            CHECK(fs.x == fn.x);
            CHECK(fs.y == fn.y);
        }
    }
}

TEST_CASE("adjoint identity: A({u}) ghat . n equals ghat . xi({u})") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (const DiffusionModel& m :
         {heat_model(0.01), anisotropic_model(0.01), porous_medium_model(0.01, 3.0, true)}) {
        for (int it = 0; it < 500; ++it) {
            TracePoint um{unif(rng), {unif(rng), unif(rng)}, {unif(rng), unif(rng), unif(rng)}};
            TracePoint up{unif(rng), {unif(rng), unif(rng)}, {unif(rng), unif(rng), unif(rng)}};
            const double ang = 3.1 * unif(rng);
            const Vec2 n{std::cos(ang), std::sin(ang)};
            const Vec2 ghat = gradient_flux(um, up, n, 0.21, 9.0, 1.0 / 12.0);
            const double uavg = average(um.u, up.u);
            const double lhs = m.A(uavg).apply(ghat).dot(n);
            const double rhs = ghat.dot(direction_vector(m, uavg, n));
            CHECK(std::fabs(lhs - rhs) <= 1e-13 * std::fmax(1.0, std::fabs(lhs)));
        }
    }
}
