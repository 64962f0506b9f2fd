#include "glaeser/bundle.hpp"

#include <cmath>

namespace glaeser {

namespace {

long zero_index(double lo, double h, long n) {
    if (h <= 0.0) return -1;
    const double t = -lo / h;
    const long i = std::lround(t);
    if (i < 0 || i >= n) return -1;
    return std::abs(t - static_cast<double>(i)) <= 1e-9 ? i : -1;
}

} // namespace

Grid Grid::square(Vec2 lo, Vec2 hi, long resolution) {
    if (resolution < 2) throw BadScenario("grid resolution must be >= 2");
    Grid g;
    g.domain_dim = 2;
    g.nx = g.ny = resolution;
    g.lo = lo;
    g.hi = hi;
    return g;
}

Grid Grid::line(double lo, double hi, long resolution) {
    if (resolution < 2) throw BadScenario("grid resolution must be >= 2");
    Grid g;
    g.domain_dim = 1;
    g.nx = resolution;
    g.ny = 1;
    g.lo = {lo, 0.0};
    g.hi = {hi, 0.0};
    return g;
}

long Grid::zero_index_x() const { return zero_index(lo.x, spacing(), nx); }

long Grid::zero_index_y() const {
    if (domain_dim == 1) return 0;
    return zero_index(lo.y, (hi.y - lo.y) / static_cast<double>(ny - 1), ny);
}

Bundle build_initial_bundle(const ScenarioSystem& system, const Grid& grid) {
    if (grid.domain_dim != system.domain_dim) {
        throw BadScenario("grid/scenario domain dimension mismatch");
    }
    const long ox = grid.zero_index_x();
    const long oy = grid.zero_index_y();
    if (system.is_special && (ox < 0 || oy < 0)) {
        throw BadScenario("scenario '" + system.name +
                          "': the lattice must contain the special point 0");
    }

    Bundle bundle;
    bundle.grid = grid;
    bundle.fibers.reserve(grid.node_count());
    bundle.special.assign(grid.node_count(), 0);

    for (long iy = 0; iy < grid.ny; ++iy) {
        for (long ix = 0; ix < grid.nx; ++ix) {
            const long li = ox >= 0 ? ix - ox : ix;
            const long lj = grid.domain_dim == 2 ? (oy >= 0 ? iy - oy : iy) : 0;
            const Vec2 x = grid.point(ix, iy);
            if (system.is_special && system.is_special(li, lj)) {
                bundle.special[grid.node_index(ix, iy)] = 1;
                bundle.fibers.push_back(system.special_fiber(x));
                continue;
            }
            ConvexRegion fiber(system.fiber_dim);
            for (const HalfPlane& hp : system.rows(x, li, lj)) fiber.add(hp);
            bundle.fibers.push_back(fiber);
        }
    }
    return bundle;
}

const ConvexRegion& fiber_at(const Bundle& bundle, long node) {
    if (node < 0 || node >= static_cast<long>(bundle.fibers.size())) {
        throw Error("fiber_at: node index out of range");
    }
    return bundle.fibers[node];
}

Box fiber_window(const ScenarioSystem& system) {
    return Box::square(8.0 * (1.0 + system.data_bound));
}

} // namespace glaeser
