#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "glaeser/convex2.hpp"

using namespace glaeser;

namespace {

ConvexRegion unit_square() {
    ConvexRegion r(2);
    r.add(HalfPlane({1.0, 0.0}, 1.0));
    r.add(HalfPlane({-1.0, 0.0}, 1.0));
    r.add(HalfPlane({0.0, 1.0}, 1.0));
    r.add(HalfPlane({0.0, -1.0}, 1.0));
    return r;
}

const Box kWin = Box::square(10.0);

} // namespace

TEST_CASE("halfplane construction and degeneracy") {
    const HalfPlane hp({2.0, 0.0}, 4.0); // normalized to (1,0), offset 2
    CHECK(hp.normal.x == doctest::Approx(1.0));
    CHECK(hp.offset == doctest::Approx(2.0));
    CHECK_THROWS_AS(HalfPlane({0.0, 0.0}, 1.0), DegenerateNormal);
}

TEST_CASE("realize clips the window to the region") {
    const Polygon p = realize(unit_square(), kWin);
    REQUIRE(p.pts.size() == 4);
    for (const Vec2& v : p.pts) {
        CHECK(std::abs(v.x) == doctest::Approx(1.0));
        CHECK(std::abs(v.y) == doctest::Approx(1.0));
    }
}

TEST_CASE("contains and distance basics") {
    const ConvexRegion sq = unit_square();
    CHECK(contains(sq, {0.0, 0.0}));
    CHECK(contains(sq, {1.0, 1.0}));
    CHECK_FALSE(contains(sq, {1.1, 0.0}));

    ConvexRegion half(2);
    half.add(HalfPlane({-1.0, 0.0}, -1.0)); // y1 >= 1
    CHECK(distance(half, {0.0, 0.0}) == doctest::Approx(1.0));

    CHECK(distance(sq, {2.0, 2.0}) == doctest::Approx(std::sqrt(2.0)));
    CHECK(distance(sq, {0.5, -0.25}) == doctest::Approx(0.0));
}

TEST_CASE("contains iff distance zero on random points") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const ConvexRegion sq = unit_square();
    for (int i = 0; i < 200; ++i) {
        const Vec2 p{u(rng), u(rng)};
        const bool inside = contains(sq, p, 0.0);
        const double d = distance(sq, p);
        if (inside) CHECK(d == doctest::Approx(0.0).epsilon(1e-9));
        else CHECK(d > 0.0);
    }
}

TEST_CASE("intersect concatenates and matches set semantics") {
    ConvexRegion a(2);
    a.add(HalfPlane({1.0, 0.0}, 3.0));
    a.add(HalfPlane({0.0, 1.0}, 3.0));
    ConvexRegion b(2);
    b.add(HalfPlane({-1.0, 0.0}, 2.0));
    b.add(HalfPlane({0.0, -1.0}, 2.0));
    const ConvexRegion box = intersect(a, b); // [-2,3]^2
    CHECK(contains(box, {3.0, -2.0}));
    CHECK_FALSE(contains(box, {3.1, 0.0}));
    CHECK_FALSE(contains(box, {0.0, -2.1}));

    const ConvexRegion same = intersect(a, ConvexRegion::full(2));
    CHECK(same.planes().size() == a.planes().size());

    ConvexRegion one(1);
    one.add(HalfPlane({1.0, 0.0}, 1.0));
    CHECK_THROWS_AS(intersect(a, one), DimMismatch);
}

TEST_CASE("intersect is commutative on random samples") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    ConvexRegion a(2), b(2);
    a.add(HalfPlane({1.0, 1.0}, 1.0));
    a.add(HalfPlane({-1.0, 0.5}, 2.0));
    b.add(HalfPlane({0.0, -1.0}, 0.5));
    const ConvexRegion ab = intersect(a, b);
    const ConvexRegion ba = intersect(b, a);
    for (int i = 0; i < 300; ++i) {
        const Vec2 p{u(rng), u(rng)};
        CHECK(contains(ab, p) == contains(ba, p));
        CHECK(contains(ab, p) == (contains(a, p) && contains(b, p)));
    }
}

TEST_CASE("dilate offsets and containment") {
    ConvexRegion h(2);
    h.add(HalfPlane({1.0, 0.0}, 1.0));
    const ConvexRegion d0 = dilate(h, 0.0);
    CHECK(d0.planes()[0].offset == doctest::Approx(1.0));
    const ConvexRegion d = dilate(h, 0.5);
    CHECK(d.planes()[0].offset == doctest::Approx(1.5));

    // dilate(dilate(K,a),b) == dilate(K,a+b) exactly on offsets
    const ConvexRegion sq = unit_square();
    const ConvexRegion two = dilate(dilate(sq, 0.2), 0.3);
    const ConvexRegion one = dilate(sq, 0.5);
    for (std::size_t i = 0; i < one.planes().size(); ++i) {
        CHECK(two.planes()[i].offset == one.planes()[i].offset);
    }

    // outer approximation of the 0.1-neighborhood of the square
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-1.3, 1.3);
    const ConvexRegion dsq = dilate(sq, 0.1);
    for (int i = 0; i < 500; ++i) {
        const Vec2 p{u(rng), u(rng)};
        if (distance(sq, p) <= 0.1) CHECK(contains(dsq, p, 1e-12));
        CHECK((contains(sq, p) ? contains(dsq, p, 1e-12) : true));
    }
}

TEST_CASE("chebyshev center examples") {
    CHECK(norm(chebyshev_center(unit_square(), kWin)) == doctest::Approx(0.0).epsilon(1e-7));

    ConvexRegion half(2);
    half.add(HalfPlane({-1.0, 0.0}, 0.0)); // y1 >= 0
    const Vec2 c1 = chebyshev_center(half, kWin);
    const Vec2 c2 = chebyshev_center(half, kWin);
    CHECK(c1.x == c2.x);
    CHECK(c1.y == c2.y);

    ConvexRegion tri(2);
    tri.add(HalfPlane({0.0, -1.0}, 0.0));
    tri.add(HalfPlane({-1.0, 0.0}, 0.0));
    tri.add(HalfPlane({1.0, 1.0}, 1.0));
    const double r = 1.0 - std::sqrt(2.0) / 2.0;
    const Vec2 c = chebyshev_center(tri, kWin);
    CHECK(c.x == doctest::Approx(r).epsilon(1e-5));
    CHECK(c.y == doctest::Approx(r).epsilon(1e-5));

    CHECK_THROWS_AS(chebyshev_center(ConvexRegion::never(2), kWin), EmptyRegion);
}

TEST_CASE("steiner point examples") {
    CHECK(norm(steiner_point(unit_square(), kWin)) == doctest::Approx(0.0).epsilon(1e-9));

    // translation equivariance
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    const ConvexRegion base = unit_square();
    for (int i = 0; i < 20; ++i) {
        const Vec2 v{u(rng), u(rng)};
        ConvexRegion moved(2);
        for (const HalfPlane& hp : base.planes()) {
            moved.add(HalfPlane(hp.normal, hp.offset + dot(hp.normal, v)));
        }
        const Vec2 s = steiner_point(moved, kWin);
        CHECK(norm(s - v) == doctest::Approx(0.0).epsilon(1e-6));
    }

    // 64-halfplane disk
    ConvexRegion disk(2);
    for (int k = 0; k < 64; ++k) {
        const double phi = 2.0 * M_PI * k / 64.0;
        disk.add(HalfPlane({std::cos(phi), std::sin(phi)}, 1.0));
    }
    CHECK(norm(steiner_point(disk, kWin)) <= 1e-3);
}

TEST_CASE("support values") {
    CHECK(support(unit_square(), {1.0, 0.0}, kWin) == doctest::Approx(1.0));
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(support(unit_square(), {s, s}, kWin) == doctest::Approx(std::sqrt(2.0)));
    CHECK_THROWS_AS(support(ConvexRegion::never(2), {1.0, 0.0}, kWin), EmptyRegion);
}

TEST_CASE("hausdorff_sampled examples") {
    const ConvexRegion sq = unit_square();
    CHECK(hausdorff_sampled(sq, sq, kWin) == doctest::Approx(0.0));

    ConvexRegion wide(2);
    wide.add(HalfPlane({1.0, 0.0}, 1.5));
    wide.add(HalfPlane({-1.0, 0.0}, 1.0));
    wide.add(HalfPlane({0.0, 1.0}, 1.0));
    wide.add(HalfPlane({0.0, -1.0}, 1.0));
    CHECK(hausdorff_sampled(sq, wide, kWin) == doctest::Approx(0.5).epsilon(0.02));

    CHECK(hausdorff_sampled(sq, dilate(sq, 0.2), kWin) ==
          doctest::Approx(0.2 * std::sqrt(2.0)).epsilon(0.1));
}

TEST_CASE("is_empty agrees with a fine-grid membership scan") {
    std::mt19937 rng(97);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
    std::uniform_int_distribution<int> nplanes(2, 6);
    const Box win = Box::square(3.0);
    const int scan = 301;
    for (int trial = 0; trial < 200; ++trial) {
        ConvexRegion r(2);
        const int n = nplanes(rng);
        for (int k = 0; k < n; ++k) {
            const double a = ang(rng);
            const Vec2 nrm{std::cos(a), std::sin(a)};
            const Vec2 anchor{coord(rng), coord(rng)};
            r.add(HalfPlane(nrm, dot(nrm, anchor)));
        }
        bool hit = false;
        for (int i = 0; i < scan && !hit; ++i) {
            for (int j = 0; j < scan && !hit; ++j) {
                const Vec2 p{win.lo.x + (win.hi.x - win.lo.x) * i / (scan - 1),
                             win.lo.y + (win.hi.y - win.lo.y) * j / (scan - 1)};
                hit = contains(r, p, 0.0);
            }
        }
        if (hit) CHECK_FALSE(is_empty(r)); // no false empties at grid scale
    }
}

TEST_CASE("convex hull and polygon round trip") {
    const Polygon hull = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}});
    CHECK(hull.pts.size() == 4);
    const ConvexRegion back = polygon_to_region(hull);
    CHECK(contains(back, {0.5, 0.5}));
    CHECK_FALSE(contains(back, {1.5, 0.5}));
}
