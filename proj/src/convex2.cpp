#include "glaeser/convex2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace glaeser {

Polygon realize(const ConvexRegion& region, const Box& window, double clip_tol) {
    Polygon poly = Polygon::from_box(window);
    for (const HalfPlane& hp : region.planes()) {
        poly = clip(poly, hp, clip_tol);
        if (poly.empty()) break;
    }
    return poly;
}

bool is_empty(const ConvexRegion& region) {
    return realize(region, Box::square(kWorkingHalfwidth)).empty();
}

bool contains(const ConvexRegion& region, Vec2 point, double tol) {
    for (const HalfPlane& hp : region.planes()) {
        if (hp.violation(point) > tol) return false;
    }
    return true;
}

double distance(const ConvexRegion& region, Vec2 point) {
    if (contains(region, point, 0.0)) return 0.0;
    Polygon poly = realize(region, Box::square(kWorkingHalfwidth));
    if (poly.empty()) throw EmptyRegion("distance to empty region");
    if (region.dim() == 1) {
        // Only the first coordinate matters in 1-D fibers.
        double best = std::numeric_limits<double>::infinity();
        for (const Vec2& v : poly.pts) best = std::min(best, std::abs(point.x - v.x));
        return best;
    }
    return polygon_distance(poly, point);
}

ConvexRegion intersect(const ConvexRegion& a, const ConvexRegion& b) {
    if (a.dim() != b.dim()) throw DimMismatch("intersect of mixed fiber dims");
    ConvexRegion out = a;
    for (const HalfPlane& hp : b.planes()) out.add(hp);
    return out;
}

ConvexRegion dilate(const ConvexRegion& region, double eps) {
    ConvexRegion out(region.dim());
    for (const HalfPlane& hp : region.planes()) {
        HalfPlane moved = hp;
        moved.offset += eps;
        out.add(moved);
    }
    return out;
}

Vec2 chebyshev_center(const ConvexRegion& region, const Box& window) {
    const Box work =
        Box{{std::max(window.lo.x, -kWorkingHalfwidth), std::max(window.lo.y, -kWorkingHalfwidth)},
            {std::min(window.hi.x, kWorkingHalfwidth), std::min(window.hi.y, kWorkingHalfwidth)}};
    auto shrunk = [&](double r) -> Polygon {
        Box b{{work.lo.x + r, work.lo.y + r}, {work.hi.x - r, work.hi.y - r}};
        if (b.lo.x > b.hi.x || b.lo.y > b.hi.y) return Polygon{};
        Polygon poly = Polygon::from_box(b);
        for (const HalfPlane& hp : region.planes()) {
            HalfPlane moved = hp;
            moved.offset -= r;
            poly = clip(poly, moved, 1e-12);
            if (poly.empty()) break;
        }
        return poly;
    };
    if (shrunk(0.0).empty()) throw EmptyRegion("chebyshev_center of empty region");
    double lo = 0.0;
    double hi = 0.5 * std::max(work.hi.x - work.lo.x, work.hi.y - work.lo.y);
    for (int it = 0; it < 100 && hi - lo > 1e-13 * (1.0 + hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (shrunk(mid).empty()) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Polygon opt = shrunk(lo);
    Vec2 best = opt.pts.front();
    for (const Vec2& v : opt.pts) {
        if (v.x < best.x || (v.x == best.x && v.y < best.y)) best = v;
    }
    return best;
}

Vec2 steiner_point(const ConvexRegion& region, const Box& window, int n_dirs) {
    if (n_dirs < 8) throw Error("steiner_point requires n_dirs >= 8");
    Polygon poly = realize(region, window);
    if (poly.empty()) throw EmptyRegion("steiner_point of empty region");
    const double dphi = 2.0 * std::numbers::pi / n_dirs;
    Vec2 s{0.0, 0.0};
    for (int k = 0; k < n_dirs; ++k) {
        const double phi = k * dphi;
        const Vec2 u{std::cos(phi), std::sin(phi)};
        s = s + support_value(poly, u) * u;
    }
    s = (dphi / std::numbers::pi) * s;
    if (!polygon_contains(poly, s, 1e-9)) s = polygon_project(poly, s);
    return s;
}

double support(const ConvexRegion& region, Vec2 direction, const Box& window) {
    Polygon poly = realize(region, window);
    if (poly.empty()) throw EmptyRegion("support of empty region");
    return support_value(poly, direction);
}

double hausdorff_sampled(const ConvexRegion& a, const ConvexRegion& b,
                         const Box& window, std::size_t n) {
    Polygon pa = realize(a, window);
    Polygon pb = realize(b, window);
    if (pa.empty() || pb.empty()) {
        throw EmptyRegion("hausdorff_sampled requires both regions to meet the window");
    }
    double worst = 0.0;
    for (const Vec2& p : polygon_boundary_samples(pa, n)) {
        worst = std::max(worst, polygon_distance(pb, p));
    }
    for (const Vec2& p : polygon_boundary_samples(pb, n)) {
        worst = std::max(worst, polygon_distance(pa, p));
    }
    return worst;
}

Polygon convex_hull(std::vector<Vec2> points) {
    std::sort(points.begin(), points.end(), [](Vec2 a, Vec2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const std::size_t n = points.size();
    if (n <= 2) return Polygon{points};
    std::vector<Vec2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], points[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = points[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], points[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    return Polygon{hull};
}

ConvexRegion polygon_to_region(const Polygon& poly) {
    if (poly.empty()) return ConvexRegion::never(2);
    ConvexRegion out(2);
    const std::size_t n = poly.pts.size();
    if (n == 1) {
        const Vec2 p = poly.pts[0];
        out.add(HalfPlane({1.0, 0.0}, p.x));
        out.add(HalfPlane({-1.0, 0.0}, -p.x));
        out.add(HalfPlane({0.0, 1.0}, p.y));
        out.add(HalfPlane({0.0, -1.0}, -p.y));
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly.pts[i];
        const Vec2 b = poly.pts[(i + 1) % n];
        const Vec2 e = b - a;
        if (norm(e) <= 1e-15) continue;
        // Outward normal of a CCW edge.
        const Vec2 nrm{e.y, -e.x};
        out.add(HalfPlane(nrm, dot(nrm, a)));
        if (n == 2) {
            out.add(HalfPlane({-nrm.x, -nrm.y}, dot({-nrm.x, -nrm.y}, a)));
        }
    }
    return out;
}

} // namespace glaeser
