#include "glaeser/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace glaeser {

namespace {

Vec2 steiner_of_polygon(const Polygon& poly, int n_dirs) {
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

std::vector<HalfPlane> constraint_rows(const ScenarioSystem& system, Vec2 x,
                                       long li, long lj) {
    if (system.is_special && system.is_special(li, lj)) {
        return system.special_fiber(x).planes();
    }
    return system.rows(x, li, lj);
}

double max_violation(const std::vector<HalfPlane>& rows, Vec2 value) {
    double v = 0.0;
    for (const HalfPlane& hp : rows) v = std::max(v, hp.violation(value));
    return v;
}

} // namespace

Vec2 SelectionField::interpolate(Vec2 x) const {
    const double h = grid.spacing();
    const double tx = std::clamp((x.x - grid.lo.x) / h, 0.0, static_cast<double>(grid.nx - 1));
    const long i0 = std::min(grid.nx - 2, static_cast<long>(tx));
    const double ax = tx - static_cast<double>(i0);
    if (grid.domain_dim == 1) {
        const Vec2 a = values[i0];
        const Vec2 b = values[i0 + 1];
        return a + ax * (b - a);
    }
    const double hy = (grid.hi.y - grid.lo.y) / static_cast<double>(grid.ny - 1);
    const double ty = std::clamp((x.y - grid.lo.y) / hy, 0.0, static_cast<double>(grid.ny - 1));
    const long j0 = std::min(grid.ny - 2, static_cast<long>(ty));
    const double ay = ty - static_cast<double>(j0);
    const Vec2 v00 = values[grid.node_index(i0, j0)];
    const Vec2 v10 = values[grid.node_index(i0 + 1, j0)];
    const Vec2 v01 = values[grid.node_index(i0, j0 + 1)];
    const Vec2 v11 = values[grid.node_index(i0 + 1, j0 + 1)];
    const Vec2 b0 = v00 + ax * (v10 - v00);
    const Vec2 b1 = v01 + ax * (v11 - v01);
    return b0 + ay * (b1 - b0);
}

SelectionField construct_selection(const Bundle& stable, const Box& window,
                                   int n_dirs) {
    SelectionField sel;
    sel.grid = stable.grid;
    sel.values.reserve(stable.fibers.size());
    for (long node = 0; node < stable.grid.node_count(); ++node) {
        const Polygon poly = realize(stable.fibers[node], window);
        if (poly.empty()) {
            const long ix = node % stable.grid.nx;
            const long iy = node / stable.grid.nx;
            const Vec2 x = stable.grid.point(ix, iy);
            throw EmptyFiber("empty fiber at node (" + std::to_string(ix) + ", " +
                             std::to_string(iy) + "), x = (" + std::to_string(x.x) +
                             ", " + std::to_string(x.y) + ")");
        }
        sel.values.push_back(steiner_of_polygon(poly, n_dirs));
    }
    sel.residuals.assign(sel.values.size(), 0.0);
    return sel;
}

VerifyReport verify_selection(SelectionField& sel, const ScenarioSystem& system,
                              double tol) {
    VerifyReport rep;
    const Grid& grid = sel.grid;
    const long ox = std::max(grid.zero_index_x(), 0L);
    const long oy = std::max(grid.zero_index_y(), 0L);
    sel.residuals.assign(sel.values.size(), 0.0);
    for (long iy = 0; iy < grid.ny; ++iy) {
        for (long ix = 0; ix < grid.nx; ++ix) {
            const long node = grid.node_index(ix, iy);
            const Vec2 x = grid.point(ix, iy);
            const double v = max_violation(
                constraint_rows(system, x, ix - ox, grid.domain_dim == 2 ? iy - oy : 0),
                sel.values[node]);
            sel.residuals[node] = v;
            if (v > rep.max_violation_nodes) {
                rep.max_violation_nodes = v;
                rep.worst_node = node;
                rep.worst_point = x;
            }
        }
    }
    // 4x-finer verification lattice; fine lattice offsets stay integral so
    // direction-dependent rows are evaluated exactly per fine ray.
    const long fnx = 4 * (grid.nx - 1) + 1;
    const long fny = grid.domain_dim == 2 ? 4 * (grid.ny - 1) + 1 : 1;
    const double hx = (grid.hi.x - grid.lo.x) / static_cast<double>(fnx - 1);
    const double hy =
        grid.domain_dim == 2 ? (grid.hi.y - grid.lo.y) / static_cast<double>(fny - 1) : 0.0;
    for (long jy = 0; jy < fny; ++jy) {
        for (long jx = 0; jx < fnx; ++jx) {
            const Vec2 x{grid.lo.x + jx * hx,
                         grid.domain_dim == 2 ? grid.lo.y + jy * hy : 0.0};
            const Vec2 value = sel.interpolate(x);
            const double v = max_violation(
                constraint_rows(system, x, jx - 4 * ox, grid.domain_dim == 2 ? jy - 4 * oy : 0),
                value);
            if (v > rep.max_violation_fine) {
                rep.max_violation_fine = v;
                rep.worst_point = x;
            }
        }
    }
    rep.pass = std::max(rep.max_violation_nodes, rep.max_violation_fine) <= tol;
    return rep;
}

std::vector<std::pair<double, double>> modulus_of_continuity(SelectionField& sel) {
    const Grid& grid = sel.grid;
    const double h = grid.spacing();
    const double diam = norm(grid.hi - grid.lo);
    int levels = 1;
    while (h * std::pow(2.0, levels - 1) < diam && levels < 40) ++levels;

    std::vector<double> thresholds(levels);
    for (int k = 0; k < levels; ++k) thresholds[k] = h * std::pow(2.0, k);
    std::vector<double> bucket_max(levels, 0.0);

    const long n = grid.node_count();
    std::vector<double> px(n), py(n);
    for (long node = 0; node < n; ++node) {
        const Vec2 x = grid.point(node % grid.nx, node / grid.nx);
        px[node] = x.x;
        py[node] = x.y;
    }
    std::vector<double> th2(levels);
    for (int k = 0; k < levels; ++k) th2[k] = thresholds[k] * thresholds[k] * (1.0 + 1e-12);

    for (long i = 0; i < n; ++i) {
        for (long j = i + 1; j < n; ++j) {
            const double dx = px[i] - px[j];
            const double dy = py[i] - py[j];
            const double d2 = dx * dx + dy * dy;
            int k = 0;
            while (k < levels && d2 > th2[k]) ++k;
            if (k >= levels) continue;
            const double df = norm(sel.values[i] - sel.values[j]);
            if (df > bucket_max[k]) bucket_max[k] = df;
        }
    }
    std::vector<std::pair<double, double>> table(levels);
    double run = 0.0;
    for (int k = 0; k < levels; ++k) {
        run = std::max(run, bucket_max[k]);
        table[k] = {thresholds[k], run};
    }
    sel.modulus_table = table;
    return table;
}

} // namespace glaeser
