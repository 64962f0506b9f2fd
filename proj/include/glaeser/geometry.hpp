#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "glaeser/errors.hpp"

namespace glaeser {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::sqrt(norm2(a)); }

/// Closed halfplane { y : dot(normal, y) <= offset } with a unit normal.
/// In one-dimensional fibers the normal is (+-1, 0) and only the first
/// coordinate of a point is meaningful.
struct HalfPlane {
    Vec2 normal;
    double offset = 0.0;

    HalfPlane() = default;

    /// Normalizes the input row.  Throws DegenerateNormal when the row's
    /// normal is too small to orient a halfplane reliably.
    HalfPlane(Vec2 raw_normal, double raw_offset) {
        const double w = norm(raw_normal);
        if (!(w > 1e-12)) {
            throw DegenerateNormal("halfplane normal has near-zero magnitude");
        }
        normal = {raw_normal.x / w, raw_normal.y / w};
        offset = raw_offset / w;
    }

    /// Signed distance of a point to the boundary (positive outside).
    double violation(Vec2 p) const { return dot(normal, p) - offset; }
};

/// Axis-aligned box used both as clipping window and as fiber window.
struct Box {
    Vec2 lo{-1.0, -1.0};
    Vec2 hi{1.0, 1.0};

    static Box square(double halfwidth) {
        return Box{{-halfwidth, -halfwidth}, {halfwidth, halfwidth}};
    }
    bool contains(Vec2 p, double tol = 0.0) const {
        return p.x >= lo.x - tol && p.x <= hi.x + tol && p.y >= lo.y - tol &&
               p.y <= hi.y + tol;
    }
    double diameter() const { return norm(hi - lo); }
};

/// Convex polygon with counterclockwise vertices.  An empty vertex list means
/// the empty set.  Degenerate polygons (segments, points) are allowed and
/// keep their distinct vertices.
struct Polygon {
    std::vector<Vec2> pts;

    bool empty() const { return pts.empty(); }

    static Polygon from_box(const Box& b) {
        return Polygon{{{b.lo.x, b.lo.y},
                        {b.hi.x, b.lo.y},
                        {b.hi.x, b.hi.y},
                        {b.lo.x, b.hi.y}}};
    }
};

/// Sutherland-Hodgman clip of a convex polygon by one halfplane.
Polygon clip(const Polygon& poly, const HalfPlane& hp, double tol = 1e-12);

/// Largest dot(dir, v) over vertices; requires nonempty polygon.
double support_value(const Polygon& poly, Vec2 dir);

/// True when p violates no polygon edge constraint beyond tol.  Implemented
/// as a point-in-convex-polygon test on the vertex chain.
bool polygon_contains(const Polygon& poly, Vec2 p, double tol = 1e-9);

/// Euclidean distance from p to the polygon (0 inside).  Requires nonempty.
double polygon_distance(const Polygon& poly, Vec2 p);

/// Euclidean projection of p onto the polygon.  Requires nonempty.
Vec2 polygon_project(const Polygon& poly, Vec2 p);

/// Area centroid; falls back to the vertex mean for degenerate polygons.
Vec2 polygon_centroid(const Polygon& poly);

/// Evenly spaced samples along the polygon boundary (vertices always
/// included).  Returns the vertices themselves for degenerate polygons.
std::vector<Vec2> polygon_boundary_samples(const Polygon& poly, std::size_t n);

/// Removes duplicate/collinear vertices in place (cheap cleanup after clips).
void polygon_simplify(Polygon& poly, double tol = 1e-12);

} // namespace glaeser
