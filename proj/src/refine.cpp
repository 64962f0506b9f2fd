#include "glaeser/refine.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>
#include <unordered_map>

#include "glaeser/kernels.hpp"

namespace glaeser {

double default_kappa(const ScenarioSystem& system) {
    return 4.0 * system.data_lipschitz + 1.0;
}

double polygon_hausdorff(const Polygon& a, const Polygon& b) {
    double worst = 0.0;
    for (const Vec2& p : a.pts) worst = std::max(worst, polygon_distance(b, p));
    for (const Vec2& p : b.pts) worst = std::max(worst, polygon_distance(a, p));
    return worst;
}

namespace {

struct SourceGroup {
    std::vector<HalfPlane> planes;
    std::vector<double> xs, ys;
    Vec2 center{0.0, 0.0};
    double radius = 0.0;
};

std::string plane_key(const std::vector<HalfPlane>& planes) {
    std::string key;
    key.resize(planes.size() * 3 * sizeof(double));
    char* out = key.data();
    for (const HalfPlane& hp : planes) {
        std::memcpy(out, &hp.normal.x, sizeof(double));
        std::memcpy(out + sizeof(double), &hp.normal.y, sizeof(double));
        std::memcpy(out + 2 * sizeof(double), &hp.offset, sizeof(double));
        out += 3 * sizeof(double);
    }
    return key;
}

struct BoundingCircle {
    Vec2 center{0.0, 0.0};
    double radius = 0.0;
};

BoundingCircle circle_of(const Polygon& poly) {
    BoundingCircle c;
    if (poly.empty()) return c;
    Vec2 s{0.0, 0.0};
    for (const Vec2& p : poly.pts) s = s + p;
    c.center = (1.0 / static_cast<double>(poly.pts.size())) * s;
    for (const Vec2& p : poly.pts) c.radius = std::max(c.radius, norm(p - c.center));
    return c;
}

/// Neighbor sources grouped by bitwise-identical halfplane lists; grouping
/// exploits that direction-dependent scenarios repeat the exact same fiber
/// along every lattice ray.
std::vector<SourceGroup> build_groups(const Bundle& bundle, bool* any_empty_source) {
    std::vector<SourceGroup> groups;
    std::unordered_map<std::string, std::size_t> index;
    *any_empty_source = false;
    for (long node = 0; node < bundle.grid.node_count(); ++node) {
        if (bundle.node_special(node)) continue;
        const ConvexRegion& fiber = bundle.fibers[node];
        const std::string key = plane_key(fiber.planes());
        auto [it, inserted] = index.try_emplace(key, groups.size());
        if (inserted) {
            SourceGroup g;
            g.planes = fiber.planes();
            groups.push_back(std::move(g));
            if (is_empty(fiber)) *any_empty_source = true;
        }
        const long ix = node % bundle.grid.nx;
        const long iy = node / bundle.grid.nx;
        const Vec2 x = bundle.grid.point(ix, iy);
        groups[it->second].xs.push_back(x.x);
        groups[it->second].ys.push_back(x.y);
    }
    for (SourceGroup& g : groups) {
        Vec2 s{0.0, 0.0};
        for (std::size_t i = 0; i < g.xs.size(); ++i) s = s + Vec2{g.xs[i], g.ys[i]};
        g.center = (1.0 / static_cast<double>(g.xs.size())) * s;
        for (std::size_t i = 0; i < g.xs.size(); ++i) {
            g.radius = std::max(g.radius, norm(Vec2{g.xs[i], g.ys[i]} - g.center));
        }
    }
    return groups;
}

struct PassState {
    std::vector<ConvexRegion> regions;
    std::vector<Polygon> polys;
};

/// Apply the incoming dilated constraints of every source group to every
/// node; returns the number of fibers actually cut.
long refine_pass(PassState& state, const Bundle& bundle,
                 const std::vector<SourceGroup>& groups,
                 const RefinementConfig& config) {
    long cuts = 0;
    const long n = bundle.grid.node_count();
    for (long node = 0; node < n; ++node) {
        Polygon& poly = state.polys[node];
        if (poly.empty()) continue;
        const long ix = node % bundle.grid.nx;
        const long iy = node / bundle.grid.nx;
        const Vec2 x = bundle.grid.point(ix, iy);
        BoundingCircle circ = circle_of(poly);
        bool circ_stale = false;
        bool cut_here = false;
        for (const SourceGroup& g : groups) {
            const double d_low =
                std::max(0.0, norm(x - g.center) - g.radius);
            if (d_low > config.neighbor_radius) continue;
            if (circ_stale) {
                circ = circle_of(poly);
                circ_stale = false;
            }
            bool candidate = false;
            for (const HalfPlane& hp : g.planes) {
                const double ub = dot(hp.normal, circ.center) + circ.radius;
                if (ub > hp.offset + config.epsilon_of_r(d_low) + config.support_tol) {
                    candidate = true;
                    break;
                }
            }
            if (!candidate) continue;
            const double d = std::sqrt(
                kernels::min_sqdist(g.xs.data(), g.ys.data(), g.xs.size(), x.x, x.y));
            if (d > config.neighbor_radius) continue;
            const double eps = config.epsilon_of_r(d);
            for (const HalfPlane& hp : g.planes) {
                const double off = hp.offset + eps;
                if (poly.empty()) break;
                if (support_value(poly, hp.normal) <= off + config.support_tol) continue;
                HalfPlane cutp = hp;
                cutp.offset = off;
                poly = clip(poly, cutp, 1e-12);
                state.regions[node].add(cutp);
                circ_stale = true;
                cut_here = true;
            }
            if (poly.empty()) break;
        }
        if (cut_here) ++cuts;
    }
    return cuts;
}

PassState initial_state(const Bundle& bundle, const Box& window) {
    PassState state;
    state.regions = bundle.fibers;
    state.polys.reserve(bundle.fibers.size());
    for (const ConvexRegion& fiber : bundle.fibers) {
        state.polys.push_back(realize(fiber, window));
    }
    return state;
}

Bundle state_to_bundle(const Bundle& src, PassState&& state) {
    Bundle out;
    out.grid = src.grid;
    out.special = src.special;
    out.fibers.reserve(state.regions.size());
    for (std::size_t i = 0; i < state.regions.size(); ++i) {
        if (state.polys[i].empty()) {
            out.fibers.push_back(ConvexRegion::never(state.regions[i].dim()));
        } else {
            out.fibers.push_back(std::move(state.regions[i]));
        }
    }
    return out;
}

void empty_everything(PassState& state) {
    for (Polygon& p : state.polys) p.pts.clear();
}

} // namespace

Bundle refine_once(const Bundle& bundle, const RefinementConfig& config) {
    bool any_empty_source = false;
    const std::vector<SourceGroup> groups = build_groups(bundle, &any_empty_source);
    PassState state = initial_state(bundle, config.window);
    if (any_empty_source) {
        empty_everything(state);
    } else {
        refine_pass(state, bundle, groups, config);
    }
    return state_to_bundle(bundle, std::move(state));
}

std::pair<Bundle, RefinementReport> refine_to_stable(const Bundle& bundle,
                                                     const RefinementConfig& config) {
    RefinementReport report;
    bool any_empty_source = false;
    const std::vector<SourceGroup> groups = build_groups(bundle, &any_empty_source);
    PassState state = initial_state(bundle, config.window);

    if (any_empty_source) {
        empty_everything(state);
        report.iterations_run = 1;
        report.stabilized = true;
        report.per_iteration_change.push_back(0.0);
        report.per_iteration_change_off_special.push_back(0.0);
    } else {
        for (int it = 0; it < config.max_iterations; ++it) {
            std::vector<Polygon> before = state.polys;
            const long cuts = refine_pass(state, bundle, groups, config);
            double change = 0.0;
            double change_off_special = 0.0;
            if (cuts > 0) {
                for (long node = 0; node < bundle.grid.node_count(); ++node) {
                    const Polygon& a = before[node];
                    const Polygon& b = state.polys[node];
                    double c = 0.0;
                    if (a.empty() != b.empty()) {
                        c = config.window.diameter();
                    } else if (!a.empty()) {
                        c = polygon_hausdorff(a, b);
                    }
                    change = std::max(change, c);
                    if (!bundle.node_special(node)) {
                        change_off_special = std::max(change_off_special, c);
                    }
                }
            }
            report.per_iteration_change.push_back(change);
            report.per_iteration_change_off_special.push_back(change_off_special);
            report.iterations_run = it + 1;
            if (change <= config.stabilization_tol && it > 0) {
                report.stabilized = true;
                break;
            }
            if (change <= config.stabilization_tol && cuts == 0) {
                // Nothing was ever cut: the bundle was already stable.
                report.stabilized = true;
                break;
            }
        }
    }

    Bundle refined = state_to_bundle(bundle, std::move(state));
    for (long node = 0; node < refined.grid.node_count(); ++node) {
        if (is_empty(refined.fibers[node])) report.empty_nodes.push_back(node);
    }
    return {std::move(refined), std::move(report)};
}

Bundle brute_force_refine(const Bundle& bundle, const Box& window,
                          const std::vector<double>& eps_list,
                          const std::vector<double>& delta_list,
                          std::vector<std::vector<Vec2>>* clouds) {
    const long n = bundle.grid.node_count();
    if (n > 33 * 33) throw TooLarge("brute_force_refine caps at 33^2 nodes");
    if (eps_list.empty() || delta_list.empty()) {
        throw Error("brute_force_refine needs nonempty eps/delta ladders");
    }

    std::vector<Polygon> polys;
    std::vector<Vec2> coords;
    polys.reserve(n);
    coords.reserve(n);
    for (long node = 0; node < n; ++node) {
        polys.push_back(realize(bundle.fibers[node], window));
        coords.push_back(bundle.grid.point(node % bundle.grid.nx, node / bundle.grid.nx));
    }
    const bool one_dim = bundle.grid.domain_dim == 1 || bundle.fibers[0].dim() == 1;

    auto fiber_dist = [&](long node, Vec2 z) -> double {
        const Polygon& p = polys[node];
        if (p.empty()) return std::numeric_limits<double>::infinity();
        if (one_dim) {
            double lo = p.pts[0].x, hi = p.pts[0].x;
            for (const Vec2& v : p.pts) {
                lo = std::min(lo, v.x);
                hi = std::max(hi, v.x);
            }
            return z.x < lo ? lo - z.x : (z.x > hi ? z.x - hi : 0.0);
        }
        return polygon_distance(p, z);
    };

    auto sample_fiber = [&](long node) -> std::vector<Vec2> {
        const Polygon& p = polys[node];
        std::vector<Vec2> samples;
        if (p.empty()) return samples;
        if (one_dim) {
            double lo = p.pts[0].x, hi = p.pts[0].x;
            for (const Vec2& v : p.pts) {
                lo = std::min(lo, v.x);
                hi = std::max(hi, v.x);
            }
            const int m = 101;
            for (int i = 0; i < m; ++i) {
                samples.push_back({lo + (hi - lo) * i / (m - 1), 0.0});
            }
            return samples;
        }
        samples = polygon_boundary_samples(p, 64);
        double lx = p.pts[0].x, hx = lx, ly = p.pts[0].y, hy = ly;
        for (const Vec2& v : p.pts) {
            lx = std::min(lx, v.x);
            hx = std::max(hx, v.x);
            ly = std::min(ly, v.y);
            hy = std::max(hy, v.y);
        }
        const int m = 15;
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                const Vec2 z{lx + (hx - lx) * i / (m - 1), ly + (hy - ly) * j / (m - 1)};
                if (polygon_contains(p, z, 1e-12)) samples.push_back(z);
            }
        }
        return samples;
    };

    Bundle out;
    out.grid = bundle.grid;
    out.special = bundle.special;
    out.fibers.reserve(n);
    if (clouds) clouds->assign(n, {});

    for (long node = 0; node < n; ++node) {
        const Vec2 x = coords[node];
        std::vector<Vec2> survivors;
        for (const Vec2& z : sample_fiber(node)) {
            bool pass_all_eps = true;
            for (double eps : eps_list) {
                bool some_delta = false;
                for (double delta : delta_list) {
                    bool ok = true;
                    for (long other = 0; other < n; ++other) {
                        if (norm(coords[other] - x) > delta) continue;
                        if (fiber_dist(other, z) > eps) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) {
                        some_delta = true;
                        break;
                    }
                }
                if (!some_delta) {
                    pass_all_eps = false;
                    break;
                }
            }
            if (pass_all_eps) survivors.push_back(z);
        }
        if (clouds) (*clouds)[node] = survivors;
        if (survivors.empty()) {
            out.fibers.push_back(ConvexRegion::never(bundle.fibers[node].dim()));
        } else if (one_dim) {
            double lo = survivors[0].x, hi = survivors[0].x;
            for (const Vec2& z : survivors) {
                lo = std::min(lo, z.x);
                hi = std::max(hi, z.x);
            }
            ConvexRegion r(1);
            r.add(HalfPlane({1.0, 0.0}, hi));
            r.add(HalfPlane({-1.0, 0.0}, -lo));
            out.fibers.push_back(r);
        } else {
            out.fibers.push_back(polygon_to_region(convex_hull(survivors)));
        }
    }
    return out;
}

} // namespace glaeser
