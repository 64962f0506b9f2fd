#include <cmath>

#include <doctest.h>

#include "glaeser/counterexample.hpp"
#include "glaeser/refine.hpp"
#include "glaeser/selection.hpp"

using namespace glaeser;

namespace {

ConvexRegion shifted_square(Vec2 c) {
    ConvexRegion r(2);
    r.add(HalfPlane({1.0, 0.0}, 1.0 + c.x));
    r.add(HalfPlane({-1.0, 0.0}, 1.0 - c.x));
    r.add(HalfPlane({0.0, 1.0}, 1.0 + c.y));
    r.add(HalfPlane({0.0, -1.0}, 1.0 - c.y));
    return r;
}

} // namespace

TEST_CASE("constant bundle selects a constant field") {
    const Grid g = Grid::square({0.0, 0.0}, {1.0, 1.0}, 5);
    Bundle b;
    b.grid = g;
    b.fibers.assign(25, shifted_square({0.75, -0.25}));
    b.special.assign(25, 0);
    const SelectionField sel = construct_selection(b, Box::square(8.0));
    REQUIRE(sel.values.size() == 25);
    for (const Vec2& v : sel.values) {
        CHECK(v.x == doctest::Approx(0.75).epsilon(1e-6));
        CHECK(v.y == doctest::Approx(-0.25).epsilon(1e-6));
    }
    SelectionField copy = sel;
    for (const auto& [d, m] : modulus_of_continuity(copy)) {
        (void)d;
        CHECK(m <= 1e-9);
    }
    // interpolation reproduces the constant
    const Vec2 mid = sel.interpolate({0.37, 0.81});
    CHECK(mid.x == doctest::Approx(0.75).epsilon(1e-6));
}

TEST_CASE("construct_selection names the empty node") {
    const Grid g = Grid::square({0.0, 0.0}, {1.0, 1.0}, 3);
    Bundle b;
    b.grid = g;
    b.fibers.assign(9, ConvexRegion::never(2));
    b.special.assign(9, 0);
    CHECK_THROWS_AS(construct_selection(b, Box::square(8.0)), EmptyFiber);
}

TEST_CASE("verify_selection on hand-made fields") {
    const ScenarioSystem sys = build_paper_system({1.0, 1.0, 1.0, 1.0});
    const Grid g = Grid::square({0.0, 0.0}, {1.0, 1.0}, 9);

    SelectionField zero;
    zero.grid = g;
    zero.values.assign(81, {0.0, 0.0});
    const VerifyReport ok = verify_selection(zero, sys, 1e-12);
    CHECK(ok.pass);
    CHECK(ok.max_violation_nodes == doctest::Approx(0.0));
    CHECK(ok.max_violation_fine == doctest::Approx(0.0));

    SelectionField big;
    big.grid = g;
    big.values.assign(81, {10.0, 10.0});
    const VerifyReport bad = verify_selection(big, sys, 0.5);
    CHECK_FALSE(bad.pass);
    CHECK(bad.worst_node >= 0);
    CHECK(bad.max_violation_nodes > 1.0);
}

TEST_CASE("selected values live in their fibers and the origin value is analytic") {
    const ConstantData f{3.0, 2.0, -1.0, 2.0};
    const ScenarioSystem sys = build_paper_system(f);
    const Grid g = Grid::square({0.0, 0.0}, {1.0, 1.0}, 17);
    const Bundle initial = build_initial_bundle(sys, g);
    RefinementConfig cfg;
    cfg.window = fiber_window(sys);
    auto [stable, report] = refine_to_stable(initial, cfg);
    REQUIRE(report.stabilized);
    REQUIRE(report.empty_nodes.empty());
    const SelectionField sel = construct_selection(stable, cfg.window);
    for (long i = 0; i < g.node_count(); ++i) {
        CHECK(contains(stable.fibers[i], sel.values[i], 1e-6));
    }
    const long origin = g.node_index(0, 0);
    CHECK(h1_origin_contains(sel.values[origin], f,
                             2.0 * cfg.epsilon_of_r(g.spacing())));
}

TEST_CASE("zero data keeps the selection pinned near zero") {
    const ScenarioSystem sys = build_paper_system({0.0, 0.0, 0.0, 0.0});
    const Grid g = Grid::square({0.0, 0.0}, {1.0, 1.0}, 9);
    const Bundle initial = build_initial_bundle(sys, g);
    RefinementConfig cfg;
    cfg.window = fiber_window(sys);
    auto [stable, report] = refine_to_stable(initial, cfg);
    REQUIRE(report.stabilized);
    const SelectionField sel = construct_selection(stable, cfg.window);
    const double h = g.spacing();
    for (long i = 0; i < g.node_count(); ++i) {
        if (initial.node_special(i)) {
            // the origin fiber is {y1 >= 0} cut to an O(kappa h) sliver by
            // its neighbors; the Steiner point sits inside, not exactly at 0
            CHECK(norm(sel.values[i]) <= 2.0 * cfg.kappa * h);
        } else {
            CHECK(norm(sel.values[i]) <= 1e-9);
        }
    }
}

TEST_CASE("modulus of a linear field tracks the distance") {
    const Grid g = Grid::square({0.0, 0.0}, {1.0, 1.0}, 17);
    SelectionField sel;
    sel.grid = g;
    for (long iy = 0; iy < 17; ++iy) {
        for (long ix = 0; ix < 17; ++ix) {
            sel.values.push_back({g.point(ix, iy).x, 0.0});
        }
    }
    const auto table = modulus_of_continuity(sel);
    REQUIRE_FALSE(table.empty());
    double prev = 0.0;
    for (const auto& [d, m] : table) {
        if (d <= 1.0) CHECK(m == doctest::Approx(d).epsilon(1e-9));
        CHECK(m >= prev); // nondecreasing
        prev = m;
    }
}

TEST_CASE("bilinear interpolation is exact on bilinear data") {
    const Grid g = Grid::square({0.0, 0.0}, {1.0, 1.0}, 5);
    SelectionField sel;
    sel.grid = g;
    for (long iy = 0; iy < 5; ++iy) {
        for (long ix = 0; ix < 5; ++ix) {
            const Vec2 p = g.point(ix, iy);
            sel.values.push_back({2.0 * p.x - p.y, p.x * p.y});
        }
    }
    for (const Vec2 q : {Vec2{0.3, 0.7}, Vec2{0.51, 0.49}, Vec2{1.0, 1.0}}) {
        const Vec2 v = sel.interpolate(q);
        CHECK(v.x == doctest::Approx(2.0 * q.x - q.y).epsilon(1e-12));
        CHECK(v.y == doctest::Approx(q.x * q.y).epsilon(1e-9));
    }
}
