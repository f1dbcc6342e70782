#include "ddg2d/assembly.hpp"

#include "ddg2d/errors.hpp"
#include "ddg2d/verify.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace ddg2d;

namespace {

bool touches_boundary_or_periodic(const Mesh& mesh, int element) {
    for (int idx : mesh.element_edges[element]) {
        const Edge& e = mesh.edges[idx];
        if (e.neighbor < 0 || e.periodic) return true;
    }
    return false;
}

} // namespace

TEST_CASE("constant field has zero residual (periodic, no source)") {
    Discretization disc(build_uniform_mesh({0.0, 0.0}, 1.0, 4, BoundaryKind::periodic), 2, 5, 5);
    const DiffusionModel model = heat_model(0.01);
    for (const Variant v :
         {Variant::baseline, Variant::ddgic, Variant::symmetric, Variant::nonsymmetric}) {
        const SchemeConfig scheme = SchemeConfig::defaults(v, 2);
        const DGField u = disc.project([](double, double) { return 3.25; });
        DGField dudt;
        CHECK(assemble_residual(disc, model, scheme, u, 0.0, dudt));
        double worst = 0.0;
        for (double c : dudt.coeff) worst = std::fmax(worst, std::fabs(c));
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("projected linear field: zero residual away from boundary effects") {
    // Linear functions are in the kernel of the diffusion operator and
    // continuous across interior edges; elements whose edges all lie in
    // the interior must see an exactly vanishing rate.
    for (const BoundaryKind kind : {BoundaryKind::dirichlet, BoundaryKind::periodic}) {
        Discretization disc(build_uniform_mesh({0.0, 0.0}, 1.0, 4, kind), 2, 5, 5);
        const DiffusionModel model = heat_model(0.01);
        const SchemeConfig scheme = SchemeConfig::defaults(Variant::ddgic, 2);
        const DGField u = disc.project([](double x, double y) { return 2.0 * x - y + 0.25; });
        DGField dudt;
        REQUIRE(assemble_residual(disc, model, scheme, u, 0.0, dudt));
        int interior_elements = 0;
        for (int e = 0; e < disc.mesh().n_elements(); ++e) {
            if (touches_boundary_or_periodic(disc.mesh(), e)) continue;
            ++interior_elements;
            for (double c : dudt.element(e)) CHECK(std::fabs(c) <= 1e-11);
        }
        CHECK(interior_elements > 0);
    }
}

TEST_CASE("discrete conservation for baseline and ddgic on periodic meshes") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    Discretization disc(build_uniform_mesh({0.0, 0.0}, 1.0, 4, BoundaryKind::periodic), 2, 5, 5);
    for (const auto& model : {heat_model(0.01), porous_medium_model(0.01, 3.0, false)}) {
        for (const Variant v : {Variant::baseline, Variant::ddgic}) {
            const SchemeConfig scheme = SchemeConfig::defaults(v, 2);
            DGField u(disc.mesh().n_elements(), disc.n_dof());
            for (double& c : u.coeff) c = unif(rng);
            DGField dudt;
            REQUIRE(assemble_residual(disc, model, scheme, u, 0.0, dudt));
            double scale = 0.0;
            for (int e = 0; e < disc.mesh().n_elements(); ++e)
                scale += std::fabs(disc.map(e).det * dudt.element(e)[0]) / std::numbers::sqrt2;
            CHECK(std::fabs(total_mass(disc, dudt)) <= 1e-11 * std::fmax(1.0, scale));
        }
    }
}

TEST_CASE("assembly matches the brute-force reference residual") {
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);

    struct Case {
        const char* name;
        BoundaryKind kind;
        int n;
        int k;
    };
    const Case cases[] = {
        {"2-element dirichlet", BoundaryKind::dirichlet, 1, 2},
        {"periodic 2x2", BoundaryKind::periodic, 2, 2},
        {"dirichlet 2x2 cubic", BoundaryKind::dirichlet, 2, 3},
    };

    for (const Case& c : cases) {
        CAPTURE(c.name);
        for (const auto& model :
             {heat_model(0.01), anisotropic_model(0.01), porous_medium_model(0.01, 3.0, true)}) {
            CAPTURE(model.name);
            Mesh mesh = build_uniform_mesh(model.domain_origin, model.domain_length, c.n, c.kind);
            Discretization disc(std::move(mesh), c.k, 2 * c.k + 1, 2 * c.k + 1);
            DGField u(disc.mesh().n_elements(), disc.n_dof());
            for (double& x : u.coeff) x = 0.4 * unif(rng);

            for (const Variant v :
                 {Variant::baseline, Variant::ddgic, Variant::symmetric, Variant::nonsymmetric}) {
                const SchemeConfig scheme = SchemeConfig::defaults(v, c.k);
                DGField fast;
                REQUIRE(assemble_residual(disc, model, scheme, u, 0.3, fast));
                const DGField slow = reference_residual(disc, model, scheme, u, 0.3);
                double scale = 1.0;
                for (double s : slow.coeff) scale = std::fmax(scale, std::fabs(s));
                double worst = 0.0;
                for (std::size_t i = 0; i < slow.coeff.size(); ++i)
                    worst = std::fmax(worst, std::fabs(fast.coeff[i] - slow.coeff[i]));
                CHECK(worst <= 1e-12 * scale);
            }
        }
    }
}

TEST_CASE("non-finite coefficients are flagged, not propagated silently") {
    Discretization disc(build_uniform_mesh({0.0, 0.0}, 1.0, 2, BoundaryKind::periodic), 2, 5, 5);
    const DiffusionModel model = heat_model(0.01);
    const SchemeConfig scheme = SchemeConfig::defaults(Variant::ddgic, 2);
    DGField u(disc.mesh().n_elements(), disc.n_dof());
    u.coeff[3] = std::numeric_limits<double>::infinity();
    DGField dudt;
    CHECK(!assemble_residual(disc, model, scheme, u, 0.0, dudt));
}

TEST_CASE("initial projection") {
    SUBCASE("polynomials of degree <= k are reproduced pointwise") {
        std::mt19937_64 rng(71);
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        Discretization disc(build_uniform_mesh({0.0, 0.0}, 1.0, 3, BoundaryKind::dirichlet), 2, 5, 5);
        auto f = [](double x, double y) { return 1.0 - 2.0 * x + y + 0.5 * x * y - x * x; };
        const DGField u = disc.project(f);
        for (int it = 0; it < 50; ++it) {
            const Vec2 x{0.5 * (unif(rng) + 1.0), 0.5 * (unif(rng) + 1.0)};
            CHECK(std::fabs(disc.evaluate_at(u, x) - f(x.x, x.y)) <= 1e-12);
        }
    }

    SUBCASE("projection residual is orthogonal to the basis") {
        Discretization disc(build_uniform_mesh({0.0, 0.0}, 1.0, 2, BoundaryKind::dirichlet), 2, 5, 5);
        auto f = [](double x, double y) { return std::cos(2.0 * std::numbers::pi * (x + y)); };
        const DGField u = disc.project(f);
        // Quadrature inner products of (u - f) against every basis function
        // vanish by construction of the projection.
        const auto& rule = disc.vol_rule();
        for (int e = 0; e < disc.mesh().n_elements(); ++e) {
            for (int j = 0; j < disc.n_dof(); ++j) {
                double s = 0.0;
                for (int q = 0; q < rule.size(); ++q) {
                    const Vec2 ref = rule.points[q];
                    const Vec2 x = disc.map(e).to_physical(ref);
                    s += rule.weights[q] * (disc.evaluate(u, e, ref) - f(x.x, x.y)) *
                         disc.basis().value(j, ref);
                }
                CHECK(std::fabs(s) <= 1e-13);
            }
        }
    }

    SUBCASE("projection error decays at order k+1") {
        auto f = [](double x, double y) { return std::cos(2.0 * std::numbers::pi * (x + y)); };
        auto exact = [&](double x, double y, double) { return f(x, y); };
        std::vector<double> errs;
        for (int n : {5, 10, 20}) {
            Discretization disc(build_uniform_mesh({0.0, 0.0}, 1.0, n, BoundaryKind::periodic), 2,
                                5, 5);
            errs.push_back(l2_error(disc, disc.project(f), exact, 0.0));
        }
        const double o1 = order_between(errs[0], errs[1]);
        const double o2 = order_between(errs[1], errs[2]);
        CHECK(o1 == doctest::Approx(3.0).epsilon(0.08));
        CHECK(o2 == doctest::Approx(3.0).epsilon(0.05));
    }
}

TEST_CASE("semi-discrete energy rate is non-positive for the nonsymmetric scheme") {
    // With beta0 >= beta0v the bilinear form is coercive, so u . L(u) <= 0
    // up to rounding, for any piecewise-polynomial state.
    std::mt19937_64 rng(73);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (const auto& model : {heat_model(0.01), anisotropic_model(0.01)}) {
        CAPTURE(model.name);
        for (int k : {2, 3}) {
            Discretization disc(build_uniform_mesh({0.0, 0.0}, 1.0, 5, BoundaryKind::periodic), k,
                                2 * k + 1, 2 * k + 1);
            const SchemeConfig scheme = SchemeConfig::defaults(Variant::nonsymmetric, k);
            for (int trial = 0; trial < 5; ++trial) {
                DGField u(disc.mesh().n_elements(), disc.n_dof());
                for (double& c : u.coeff) c = unif(rng);
                DGField dudt;
                REQUIRE(assemble_residual(disc, model, scheme, u, 0.0, dudt));
                const double rate = inner_product(disc, u, dudt);
                CHECK(rate <= 1e-10 * energy(disc, u));
            }
        }
    }
}
