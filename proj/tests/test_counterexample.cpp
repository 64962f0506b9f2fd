#include <cmath>
#include <random>

#include <doctest.h>

#include "glaeser/counterexample.hpp"

using namespace glaeser;

TEST_CASE("B matrix values and inverse-norm bound") {
    const Mat2 b0 = B_matrix(0.0);
    CHECK(b0[0][0] == doctest::Approx(1.0));
    CHECK(b0[0][1] == doctest::Approx(0.0));
    CHECK(b0[1][0] == doctest::Approx(0.0));
    CHECK(b0[1][1] == doctest::Approx(-1.0));

    const Mat2 bq = B_matrix(M_PI / 4.0);
    CHECK(bq[0][0] == doctest::Approx(0.25));
    CHECK(bq[0][1] == doctest::Approx(0.25));
    CHECK(bq[1][0] == doctest::Approx(0.25));
    CHECK(bq[1][1] == doctest::Approx(-0.25));

    double worst = 0.0;
    for (int k = 0; k < 10000; ++k) {
        worst = std::max(worst, b_inv_norm(0.5 * M_PI * k / 9999.0));
    }
    CHECK(worst <= 4.0);
    CHECK(worst == doctest::Approx(std::sqrt(8.0))); // attained at theta = pi/4
}

TEST_CASE("h0 criterion") {
    CHECK(h0_nonempty({3.0, 2.0, -1.0, 0.5}, {0.3, 0.3}));
    CHECK_FALSE(h0_nonempty({1.0, 1.0, -2.0, 0.0}, {0.3, 0.3}));
    CHECK(h0_nonempty({1.0, 1.0, -2.0, 0.0}, {0.0, 0.0})); // unconditional at 0
}

TEST_CASE("V and W formulas") {
    CHECK(V(7.0, 1.0, 3.0) == doctest::Approx(3.0));        // a = 1 plug
    CHECK(V(2.0, 0.5, 1.0) == doctest::Approx(2.0));        // hand arithmetic
    CHECK_THROWS_AS(V(2.0, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(V(2.0, -0.1, 1.0), DomainError);

    CHECK(W(2.0, 1.0) == doctest::Approx(2.0));
    CHECK(W(101.0, 1.0) == doctest::Approx(1.01));
    CHECK_THROWS_AS(W(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(W(0.5, 1.0), DomainError);

    // the critical point a = 1 - M/y1 attains the envelope
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> um(0.1, 3.0);
    std::uniform_real_distribution<double> dy(0.05, 10.0);
    for (int t = 0; t < 100; ++t) {
        const double m = um(rng);
        const double y1 = m + dy(rng);
        const double a = 1.0 - m / y1;
        CHECK(V(y1, a, m) == doctest::Approx(W(y1, m)).epsilon(1e-12));
        // hyperbola identity: (W - M)(y1 - M) = M^2
        CHECK((W(y1, m) - m) * (y1 - m) - m * m ==
              doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("analytic origin-set membership") {
    const ConstantData f{3.0, 2.0, -1.0, 2.0};
    CHECK(h1_origin_contains({2.0, 2.0}, f));         // on the hyperbola
    CHECK_FALSE(h1_origin_contains({1.5, 1.5}, f));   // needs y2 >= 3
    CHECK_FALSE(h1_origin_contains({0.0, 0.0}, f));   // needs y1 > M = 1
    CHECK(h1_origin_contains({2.0, 1.99}, f, 0.02));  // tolerance is honored
}

TEST_CASE("origin-set polygon matches the membership oracle") {
    const ConstantData f{3.0, 2.0, -1.0, 2.0};
    const Polygon p = h1_origin_polygon(f, Box::square(5.0));
    REQUIRE_FALSE(p.empty());
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int t = 0; t < 2000; ++t) {
        const Vec2 y{u(rng), u(rng)};
        if (h1_origin_contains(y, f)) CHECK(polygon_contains(p, y, 1e-9));
        if (!polygon_contains(p, y, 0.0)) CHECK_FALSE(h1_origin_contains(y, f, -1e-7));
    }
}

TEST_CASE("feasibility of constant data") {
    const Feasibility ok = feasibility_constant({3.0, 2.0, -1.0, 2.0});
    CHECK(ok.feasible);
    REQUIRE(ok.witness.has_value());
    CHECK(ok.witness->x == doctest::Approx(2.0));
    CHECK(ok.witness->y == doctest::Approx(2.0));

    CHECK_FALSE(feasibility_constant({3.0, 1.5, -1.0, 1.5}).feasible);
    CHECK(feasibility_constant({0.0, 0.0, 0.0, 0.0}).feasible);
    CHECK_FALSE(feasibility_constant({-1.0, 2.0, -1.0, 2.0}).feasible); // f1 < 0
    CHECK_FALSE(feasibility_constant({1.0, 1.0, -2.0, 0.0}).feasible);  // H0 empty
}

TEST_CASE("feasibility scaling and monotonicity") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::uniform_real_distribution<double> lam(0.0, 4.0);
    std::uniform_int_distribution<int> which(0, 3);
    for (int t = 0; t < 500; ++t) {
        ConstantData f{u(rng), u(rng), u(rng), u(rng)};
        if (!feasibility_constant(f).feasible) continue;
        const double l = lam(rng);
        CHECK(feasibility_constant({l * f.f1, l * f.f2, l * f.f3, l * f.f4}).feasible);
        ConstantData g = f;
        const double bump = lam(rng);
        switch (which(rng)) {
            case 0: g.f1 += bump; break;
            case 1: g.f2 += bump; break;
            case 2: g.f3 += bump; break;
            default: g.f4 += bump; break;
        }
        CHECK(feasibility_constant(g).feasible);
    }
}

TEST_CASE("feasibility agrees with grid witness sampling") {
    std::mt19937 rng(123);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::uniform_real_distribution<double> u3(-5.0, -0.1);
    const int n = 200;
    for (int t = 0; t < 1000; ++t) {
        const ConstantData f{u(rng), u(rng), u3(rng), u(rng)};
        const Feasibility v = feasibility_constant(f);
        const bool h0_off = (-f.f3 <= f.f1) && (-f.f4 <= f.f2);
        bool grid_witness = false;
        for (int i = 0; i < n && !grid_witness; ++i) {
            for (int j = 0; j < n && !grid_witness; ++j) {
                const Vec2 y{-5.5 + 11.0 * i / (n - 1), -5.5 + 11.0 * j / (n - 1)};
                grid_witness = h1_origin_contains(y, f);
            }
        }
        // sampling is one-sided: a found witness forces feasibility, and an
        // infeasible verdict forbids witnesses
        const bool sampled_feasible = grid_witness && h0_off;
        if (sampled_feasible) CHECK(v.feasible);
        if (!v.feasible) CHECK_FALSE(sampled_feasible);
        if (v.feasible) {
            REQUIRE(v.witness.has_value());
            CHECK(h1_origin_contains(*v.witness, f, 1e-9));
            CHECK(h0_off);
        }
    }
}

TEST_CASE("boundary scan classification and fit") {
    const BoundaryScan scan = boundary_scan(3.0, -1.0, Box{{1.0, 1.0}, {3.0, 3.0}}, 64);
    auto verdict_at = [&](double f2, double f4) {
        const int i = static_cast<int>(std::lround((f2 - 1.0) / 2.0 * 63));
        const int j = static_cast<int>(std::lround((f4 - 1.0) / 2.0 * 63));
        return scan.feasible[static_cast<std::size_t>(j * 64 + i)] != 0;
    };
    CHECK(verdict_at(3.0, 3.0));
    CHECK(verdict_at(2.0, 2.0)); // exactly on the hyperbola
    CHECK_FALSE(verdict_at(1.2222222, 2.9));
    CHECK(scan.fit_alpha == doctest::Approx(1.0).epsilon(0.05));
    CHECK(scan.fit_beta == doctest::Approx(1.0).epsilon(0.05));
    CHECK(scan.boundary_points.size() >= 16);

    CHECK_THROWS_AS(boundary_scan(3.0, -1.0, Box{{1.0, 1.0}, {3.0, 3.0}}, 8),
                    DomainError);
    // a coarse scan stays consistent with the analytic rule
    const BoundaryScan coarse =
        boundary_scan(3.0, -1.0, Box{{1.0, 1.0}, {3.0, 3.0}}, 16);
    CHECK(coarse.feasible.size() == 256);
}

TEST_CASE("1-D feasibility criterion") {
    CHECK(intro_1d_feasible([](double x) { return x; }, 1.0));
    CHECK_FALSE(intro_1d_feasible([](double x) { return -x; }, -1.0));
    CHECK(intro_1d_feasible([](double) { return 0.0; }, 0.0));
    CHECK(intro_1d_feasible([](double x) { return x * x; }, 0.0));
    CHECK_FALSE(intro_1d_feasible([](double x) { return -x * x; }, 0.0));
    CHECK(intro_1d_feasible([](double x) { return x + x * x; }, 1.0));
    CHECK_FALSE(intro_1d_feasible([](double) { return 1.0; }, 0.0));
}
