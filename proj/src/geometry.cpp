#include "glaeser/geometry.hpp"

#include <algorithm>
#include <limits>

namespace glaeser {

Polygon clip(const Polygon& poly, const HalfPlane& hp, double tol) {
    if (poly.empty()) return poly;
    Polygon out;
    const std::size_t n = poly.pts.size();
    out.pts.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly.pts[i];
        const Vec2 b = poly.pts[(i + 1) % n];
        const double va = hp.violation(a);
        const double vb = hp.violation(b);
        const bool ina = va <= tol;
        const bool inb = vb <= tol;
        if (ina) out.pts.push_back(a);
        if (ina != inb) {
            // Edge crosses the boundary; interpolate the crossing point.
            const double t = va / (va - vb);
            out.pts.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
        }
    }
    polygon_simplify(out);
    return out;
}

void polygon_simplify(Polygon& poly, double tol) {
    if (poly.pts.size() < 2) return;
    std::vector<Vec2> keep;
    keep.reserve(poly.pts.size());
    for (const Vec2& p : poly.pts) {
        if (keep.empty() || norm2(p - keep.back()) > tol * tol) keep.push_back(p);
    }
    while (keep.size() > 1 && norm2(keep.front() - keep.back()) <= tol * tol) {
        keep.pop_back();
    }
    // Drop collinear middle vertices (keeps degenerate segments intact).
    if (keep.size() > 3) {
        std::vector<Vec2> slim;
        slim.reserve(keep.size());
        const std::size_t m = keep.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Vec2 prev = keep[(i + m - 1) % m];
            const Vec2 cur = keep[i];
            const Vec2 next = keep[(i + 1) % m];
            if (std::abs(cross(cur - prev, next - cur)) > tol * (1.0 + norm(cur - prev) + norm(next - cur))) {
                slim.push_back(cur);
            }
        }
        if (slim.size() >= 3) keep = std::move(slim);
    }
    poly.pts = std::move(keep);
}

double support_value(const Polygon& poly, Vec2 dir) {
    if (poly.empty()) throw EmptyRegion("support_value of empty polygon");
    double best = -std::numeric_limits<double>::infinity();
    for (const Vec2& p : poly.pts) best = std::max(best, dot(dir, p));
    return best;
}

bool polygon_contains(const Polygon& poly, Vec2 p, double tol) {
    if (poly.empty()) return false;
    if (poly.pts.size() == 1) return norm(p - poly.pts[0]) <= tol;
    if (poly.pts.size() == 2) {
        // Degenerate segment.
        return polygon_distance(poly, p) <= tol;
    }
    const std::size_t n = poly.pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly.pts[i];
        const Vec2 b = poly.pts[(i + 1) % n];
        const Vec2 e = b - a;
        const double len = norm(e);
        if (len <= tol) continue;
        // CCW polygon: interior is to the left of each edge.
        if (cross(e, p - a) < -tol * len) return false;
    }
    return true;
}

namespace {

Vec2 project_segment(Vec2 a, Vec2 b, Vec2 p) {
    const Vec2 e = b - a;
    const double l2 = norm2(e);
    if (l2 == 0.0) return a;
    const double t = std::clamp(dot(p - a, e) / l2, 0.0, 1.0);
    return a + t * e;
}

} // namespace

Vec2 polygon_project(const Polygon& poly, Vec2 p) {
    if (poly.empty()) throw EmptyRegion("polygon_project of empty polygon");
    if (poly.pts.size() >= 3 && polygon_contains(poly, p, 0.0)) return p;
    Vec2 best = poly.pts[0];
    double bd = norm2(p - best);
    const std::size_t n = poly.pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 q = project_segment(poly.pts[i], poly.pts[(i + 1) % n], p);
        const double d = norm2(p - q);
        if (d < bd) {
            bd = d;
            best = q;
        }
    }
    return best;
}

double polygon_distance(const Polygon& poly, Vec2 p) {
    if (poly.empty()) throw EmptyRegion("polygon_distance of empty polygon");
    if (poly.pts.size() >= 3 && polygon_contains(poly, p, 0.0)) return 0.0;
    return norm(p - polygon_project(poly, p));
}

Vec2 polygon_centroid(const Polygon& poly) {
    if (poly.empty()) throw EmptyRegion("polygon_centroid of empty polygon");
    const std::size_t n = poly.pts.size();
    if (n < 3) {
        Vec2 s{0.0, 0.0};
        for (const Vec2& p : poly.pts) s = s + p;
        return (1.0 / static_cast<double>(n)) * s;
    }
    double area2 = 0.0;
    Vec2 c{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly.pts[i];
        const Vec2 b = poly.pts[(i + 1) % n];
        const double w = cross(a, b);
        area2 += w;
        c = c + w * (a + b);
    }
    if (std::abs(area2) < 1e-300) {
        Vec2 s{0.0, 0.0};
        for (const Vec2& p : poly.pts) s = s + p;
        return (1.0 / static_cast<double>(n)) * s;
    }
    return (1.0 / (3.0 * area2)) * c;
}

std::vector<Vec2> polygon_boundary_samples(const Polygon& poly, std::size_t n) {
    std::vector<Vec2> out;
    if (poly.empty()) return out;
    out = poly.pts;
    if (poly.pts.size() < 2 || n <= poly.pts.size()) return out;
    double perim = 0.0;
    const std::size_t m = poly.pts.size();
    for (std::size_t i = 0; i < m; ++i) {
        perim += norm(poly.pts[(i + 1) % m] - poly.pts[i]);
    }
    if (perim <= 0.0) return out;
    const std::size_t extra = n - poly.pts.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Vec2 a = poly.pts[i];
        const Vec2 b = poly.pts[(i + 1) % m];
        const double len = norm(b - a);
        const auto k = static_cast<std::size_t>(std::floor(static_cast<double>(extra) * len / perim));
        for (std::size_t j = 1; j <= k; ++j) {
            const double t = static_cast<double>(j) / static_cast<double>(k + 1);
            out.push_back(a + t * (b - a));
        }
    }
    return out;
}

} // namespace glaeser
