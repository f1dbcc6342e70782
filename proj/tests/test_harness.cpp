#include "ddg2d/convergence.hpp"
#include "ddg2d/errors.hpp"
#include "ddg2d/export.hpp"
#include "ddg2d/runconfig.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace ddg2d;

TEST_CASE("l2_error") {
    Discretization disc(build_uniform_mesh({0.0, 0.0}, 1.0, 3, BoundaryKind::dirichlet), 2, 5, 5);

    SUBCASE("polynomial exactly represented: error is zero") {
        auto f = [](double x, double y) { return 0.5 * x * x - y + 2.0; };
        const DGField u = disc.project(f);
        const double e = l2_error(disc, u, [&](double x, double y, double) { return f(x, y); }, 0.0);
        CHECK(e <= 1e-13);
    }

    SUBCASE("constant offset c over a square of side L gives c*L") {
        const double L = 2.5;
        Discretization d2(build_uniform_mesh({0.0, 0.0}, L, 4, BoundaryKind::dirichlet), 1, 3, 3);
        DGField zero(d2.mesh().n_elements(), d2.n_dof());
        const double c = 0.37;
        const double e = l2_error(d2, zero, [&](double, double, double) { return c; }, 0.0);
        CHECK(e == doctest::Approx(c * L).epsilon(1e-12));
    }
}

TEST_CASE("linf_error") {
    Discretization disc(build_uniform_mesh({0.0, 0.0}, 1.0, 2, BoundaryKind::dirichlet), 1, 3, 3);
    DGField zero(disc.mesh().n_elements(), disc.n_dof());
    CHECK(linf_error(disc, zero, [](double, double, double) { return 0.0; }, 0.0) == 0.0);

    // A known affine offset is detected at full height.
    const double e =
        linf_error(disc, zero, [](double, double, double) { return 0.25; }, 0.0);
    CHECK(e == doctest::Approx(0.25).epsilon(1e-13));
}

TEST_CASE("order computation: synthetic error pairs") {
    CHECK(order_between(1.0, 1.0 / 8.0) == 3.0);
    CHECK(order_between(4e-3, 5e-4) == 3.0);
}

TEST_CASE("run config") {
    SUBCASE("parse, defaults and overrides") {
        std::istringstream in("model = heat\nk = 3\nlevels = 5, 10\nlambda = 0.2  # cfl\n");
        RunConfig cfg = RunConfig::from_stream(in);
        CHECK(cfg.model == "heat");
        CHECK(cfg.k == 3);
        CHECK(cfg.levels == std::vector<int>{5, 10});
        CHECK(cfg.lambda == doctest::Approx(0.2));

        cfg.set("variant", "symmetric");
        CHECK(cfg.variant == "symmetric");
        CHECK_THROWS(cfg.set("no_such_key", "1"));

        const DiffusionModel m = cfg.make_model();
        CHECK(cfg.resolved_T(m) == doctest::Approx(1.0)); // model default
        CHECK(cfg.resolved_lambda(m) == doctest::Approx(0.2));
        CHECK(cfg.resolved_quadrature_exactness(m) == 7); // 2k+1
    }

    SUBCASE("echo round-trips through the parser") {
        RunConfig cfg;
        cfg.model = "blowup";
        cfg.k = 2;
        cfg.levels = {20};
        cfg.restart = true;
        cfg.cfl_mode = "blowup";
        cfg.seed = 99;
        std::istringstream in(cfg.echo());
        const RunConfig back = RunConfig::from_stream(in);
        CHECK(back.model == cfg.model);
        CHECK(back.levels == cfg.levels);
        CHECK(back.restart == cfg.restart);
        CHECK(back.cfl_mode == cfg.cfl_mode);
        CHECK(back.seed == cfg.seed);
    }

    SUBCASE("strongly nonlinear models default to 4k+1 quadrature") {
        RunConfig cfg;
        cfg.model = "porous_manufactured";
        cfg.k = 3;
        const DiffusionModel m = cfg.make_model();
        CHECK(cfg.resolved_quadrature_exactness(m) == 13);
        cfg.quadrature_exactness = 9;
        CHECK(cfg.resolved_quadrature_exactness(m) == 9);
    }

    SUBCASE("scheme parameter overrides") {
        RunConfig cfg;
        cfg.k = 2;
        cfg.beta0 = 16.0;
        const SchemeConfig s = cfg.make_scheme();
        CHECK(s.beta0 == 16.0);
        CHECK(s.beta0v == doctest::Approx(4.5)); // untouched default
    }
}

TEST_CASE("convergence study: determinism and single-level reports") {
    RunConfig cfg;
    cfg.model = "heat";
    cfg.variant = "ddgic";
    cfg.k = 2;
    cfg.levels = {5};
    cfg.T = 0.02;

    const ErrorReport r1 = convergence_study(cfg);
    const ErrorReport r2 = convergence_study(cfg);
    REQUIRE(r1.levels.size() == 1);
    CHECK(!r1.levels[0].failed);
    CHECK(r1.levels[0].l2_order == 0.0); // no previous level
    // Bit-identical reproduction.
    CHECK(r1.levels[0].l2 == r2.levels[0].l2);
    CHECK(r1.levels[0].linf == r2.levels[0].linf);

    std::ostringstream text, csv;
    write_report_text(r1, text);
    write_report_csv(r1, csv);
    CHECK(text.str().find("L2") != std::string::npos);
    CHECK(csv.str().find("n,h,l2") != std::string::npos);
}

TEST_CASE("field export") {
    Discretization disc(build_uniform_mesh({0.0, 0.0}, 1.0, 2, BoundaryKind::dirichlet), 1, 3, 3);
    const DGField u = disc.project([](double, double) { return 0.75; });

    SUBCASE("csv: constant field samples and row count") {
        const std::string path = "test_field.csv";
        export_field_csv(disc, u, path, 3);
        std::ifstream in(path);
        std::string line;
        std::getline(in, line);
        CHECK(line == "x,y,u");
        int rows = 0;
        while (std::getline(in, line)) {
            ++rows;
            const auto last = line.rfind(',');
            CHECK(std::stod(line.substr(last + 1)) == doctest::Approx(0.75).epsilon(1e-12));
        }
        CHECK(rows == disc.mesh().n_elements() * 9); // resolution^2 per element
        std::remove(path.c_str());
    }

    SUBCASE("vtk: header and point count") {
        const std::string path = "test_field.vtk";
        export_field_vtk(disc, u, path, 2);
        std::ifstream in(path);
        std::string line;
        std::getline(in, line);
        CHECK(line.rfind("# vtk", 0) == 0);
        bool found_points = false;
        while (std::getline(in, line)) {
            if (line.rfind("POINTS", 0) == 0) {
                found_points = true;
                // 6 lattice nodes per element for resolution 2
                CHECK(line.find(std::to_string(disc.mesh().n_elements() * 6)) != std::string::npos);
            }
        }
        CHECK(found_points);
        std::remove(path.c_str());
    }
}
