#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "glaeser/convex2.hpp"

namespace glaeser {

/// Uniform lattice over an axis-aligned domain in R^1 or R^2, boundary
/// included.  1-D grids keep ny == 1 and y == 0 for every node.
struct Grid {
    int domain_dim = 2;
    long nx = 2;
    long ny = 2;
    Vec2 lo{0.0, 0.0};
    Vec2 hi{1.0, 1.0};

    static Grid square(Vec2 lo, Vec2 hi, long resolution);
    static Grid line(double lo, double hi, long resolution);

    long node_count() const { return nx * ny; }
    double spacing() const { return (hi.x - lo.x) / static_cast<double>(nx - 1); }
    Vec2 point(long ix, long iy) const {
        const double hx = spacing();
        const double hy = domain_dim == 2 ? (hi.y - lo.y) / static_cast<double>(ny - 1) : 0.0;
        return {lo.x + static_cast<double>(ix) * hx, domain_dim == 2 ? lo.y + static_cast<double>(iy) * hy : 0.0};
    }
    long node_index(long ix, long iy) const { return iy * nx + ix; }
    /// Lattice index of coordinate 0 on the given axis, or -1 when 0 is not
    /// a lattice point.
    long zero_index_x() const;
    long zero_index_y() const;
};

/// Pointwise linear-inequality system A(x)F(x) <= f(x) sampled on a grid.
/// `rows` yields the constraint halfplanes at a generic node; `lattice`
/// arguments are the node's integer offsets from the coordinate origin so
/// that direction-dependent coefficients can be computed exactly per lattice
/// ray.  Nodes flagged special replace their generic rows with
/// `special_fiber`.
struct ScenarioSystem {
    std::string name;
    int domain_dim = 2;
    int fiber_dim = 2;
    int n_constraints = 4;
    std::function<std::vector<HalfPlane>(Vec2 x, long lattice_i, long lattice_j)> rows;
    std::function<bool(long lattice_i, long lattice_j)> is_special;
    std::function<ConvexRegion(Vec2 x)> special_fiber;
    /// Lipschitz bound of the data fields over the domain (0 for constants).
    double data_lipschitz = 0.0;
    /// Sup of |f_i| over the domain, used to size the fiber window.
    double data_bound = 0.0;
};

/// A grid plus one fiber per node; the discretized object (H_k(x))_x.
struct Bundle {
    Grid grid;
    std::vector<ConvexRegion> fibers;
    std::vector<std::uint8_t> special;

    bool node_special(long node) const { return special[node] != 0; }
};

/// Evaluate the scenario on every grid node.  Throws BadScenario when the
/// grid misses a required special point (e.g. the origin) or when a generic
/// row degenerates away from special points.
Bundle build_initial_bundle(const ScenarioSystem& system, const Grid& grid);

/// Immutable view of one fiber; throws Error on a bad index.
const ConvexRegion& fiber_at(const Bundle& bundle, long node);

/// Fiber window for a scenario: [-L, L]^2 with L = 8 (1 + data bound).
Box fiber_window(const ScenarioSystem& system);

} // namespace glaeser
