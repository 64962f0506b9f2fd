#include "glaeser/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace glaeser {

namespace {

constexpr double kOriginScale = 1e-6; // from the origin row -10^6 y1 <= f3
constexpr double kDataZeroTol = 1e-12;

} // namespace

double ConstantData::bound() const {
    return std::max(std::max(std::abs(f1), std::abs(f2)),
                    std::max(std::abs(f3), std::abs(f4)));
}

Mat2 B_matrix(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double c4 = c * c * c * c;
    const double s4 = s * s * s * s;
    return {{{c4, s4}, {s4, -c4}}};
}

double b_inv_norm(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double c8 = std::pow(c, 8);
    const double s8 = std::pow(s, 8);
    // B is symmetric with B^2 = (cos^8 + sin^8) I, so every singular value
    // of B is sqrt(cos^8 + sin^8).
    return 1.0 / std::sqrt(c8 + s8);
}

bool h0_nonempty(const ConstantData& f, Vec2 x) {
    if (x.x == 0.0 && x.y == 0.0) return true;
    return -f.f3 <= f.f1 && -f.f4 <= f.f2;
}

double V(double y1, double a, double M) {
    if (a <= 0.0) throw DomainError("V requires a > 0");
    const double b = 1.0 - a;
    return (M - b * b * y1) / (a * a);
}

double W(double y1, double M) {
    if (y1 <= M) throw DomainError("W requires y1 > M");
    return M + M * M / (y1 - M);
}

namespace {

/// Signed violation (positive = outside) of the tangent-family constraint
/// (1-a)^2 y1 + a^2 y2 >= M at parameter a, scaled to a unit normal.
double tangent_violation(Vec2 y, double a, double M) {
    const double b = (1.0 - a) * (1.0 - a);
    const double c = a * a;
    const double nn = std::sqrt(b * b + c * c);
    return (M - b * y.x - c * y.y) / nn;
}

/// Max unit-scaled violation of the hyperbola tangent family over a in
/// [0, 1]: dense grid plus local ternary refinement around the best cell.
double max_tangent_violation(Vec2 y, double M) {
    const int n = 4096;
    double best = -std::numeric_limits<double>::infinity();
    int best_k = 0;
    for (int k = 0; k <= n; ++k) {
        const double v = tangent_violation(y, static_cast<double>(k) / n, M);
        if (v > best) {
            best = v;
            best_k = k;
        }
    }
    double lo = std::max(0.0, (best_k - 1.0) / n);
    double hi = std::min(1.0, (best_k + 1.0) / n);
    for (int it = 0; it < 60; ++it) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (tangent_violation(y, m1, M) < tangent_violation(y, m2, M)) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    return std::max(best, tangent_violation(y, 0.5 * (lo + hi), M));
}

} // namespace

bool h1_origin_contains(Vec2 y, const ConstantData& f, double tol) {
    if (f.f1 < -tol || f.f2 < -tol || f.f4 < -tol) return false;
    if (-kOriginScale * f.f3 - y.x > tol) return false;
    // R1, R2, R4 boxes.
    if (y.x - f.f1 > tol || y.y - f.f1 > tol) return false;
    if (y.x - f.f2 > tol || -y.y - f.f2 > tol) return false;
    if (-y.x - f.f4 > tol || y.y - f.f4 > tol) return false;
    if (f.f3 >= 0.0) {
        return -y.x - f.f3 <= tol && -y.y - f.f3 <= tol;
    }
    return max_tangent_violation(y, -f.f3) <= tol;
}

Polygon h1_origin_polygon(const ConstantData& f, const Box& window, int n_tangents) {
    if (f.f1 < 0.0 || f.f2 < 0.0 || f.f4 < 0.0) return Polygon{};
    ConvexRegion region(2);
    region.add(HalfPlane({-1.0, 0.0}, kOriginScale * f.f3));
    region.add(HalfPlane({1.0, 0.0}, f.f1));
    region.add(HalfPlane({0.0, 1.0}, f.f1));
    region.add(HalfPlane({1.0, 0.0}, f.f2));
    region.add(HalfPlane({0.0, -1.0}, f.f2));
    region.add(HalfPlane({-1.0, 0.0}, f.f4));
    region.add(HalfPlane({0.0, 1.0}, f.f4));
    if (f.f3 >= 0.0) {
        region.add(HalfPlane({-1.0, 0.0}, f.f3));
        region.add(HalfPlane({0.0, -1.0}, f.f3));
    } else {
        const double M = -f.f3;
        for (int k = 0; k <= n_tangents; ++k) {
            const double a = static_cast<double>(k) / n_tangents;
            const double b = (1.0 - a) * (1.0 - a);
            const double c = a * a;
            region.add(HalfPlane({-b, -c}, -M));
        }
    }
    return realize(region, window);
}

Feasibility feasibility_constant(const ConstantData& f) {
    Feasibility out;
    if (f.f1 < 0.0 || f.f2 < 0.0 || f.f4 < 0.0) {
        out.cause = "origin sign condition fails: one of f1, f2, f4 is negative";
        return out;
    }
    if (f.f1 + f.f3 < 0.0 || f.f2 + f.f4 < 0.0) {
        out.cause = "off-origin fibers are empty: f1 + f3 < 0 or f2 + f4 < 0";
        return out;
    }
    const Vec2 corner{std::min(f.f1, f.f2), std::min(f.f1, f.f4)};
    if (f.f3 >= 0.0) {
        out.feasible = true;
        out.cause = "all fibers nonempty; refined origin fiber is a box";
        out.witness = corner;
        return out;
    }
    // The refined origin fiber is bounded above coordinatewise by the corner,
    // and the hyperbola constraint y2 >= W(y1) is decreasing in y1, so the
    // fiber is nonempty exactly when the corner clears the hyperbola.
    const double M = -f.f3;
    if (corner.x > M && corner.y >= W(corner.x, M)) {
        out.feasible = true;
        out.cause = "corner of the refined origin fiber clears the hyperbola";
        out.witness = corner;
        return out;
    }
    out.cause = "refined origin fiber is empty: corner falls below the hyperbola";
    return out;
}

BoundaryScan boundary_scan(double f1, double f3, Box range, int resolution) {
    if (resolution < 16) throw DomainError("boundary_scan requires resolution >= 16");
    BoundaryScan scan;
    scan.resolution = resolution;
    scan.range = range;
    scan.feasible.assign(static_cast<std::size_t>(resolution) * resolution, 0);
    const double dx = (range.hi.x - range.lo.x) / (resolution - 1);
    const double dy = (range.hi.y - range.lo.y) / (resolution - 1);
    auto at = [&](int i, int j) -> std::uint8_t& {
        return scan.feasible[static_cast<std::size_t>(j) * resolution + i];
    };
    for (int j = 0; j < resolution; ++j) {
        for (int i = 0; i < resolution; ++i) {
            const ConstantData f{f1, range.lo.x + i * dx, f3, range.lo.y + j * dy};
            at(i, j) = feasibility_constant(f).feasible ? 1 : 0;
        }
    }
    for (int j = 0; j < resolution; ++j) {
        for (int i = 0; i < resolution; ++i) {
            if (i + 1 < resolution && at(i, j) != at(i + 1, j)) {
                scan.boundary_points.push_back(
                    {range.lo.x + (i + 0.5) * dx, range.lo.y + j * dy});
            }
            if (j + 1 < resolution && at(i, j) != at(i, j + 1)) {
                scan.boundary_points.push_back(
                    {range.lo.x + i * dx, range.lo.y + (j + 0.5) * dy});
            }
        }
    }
    // Least-squares fit f4 = alpha + beta / (f2 - 1) over the boundary points
    // safely away from the asymptote.
    double s11 = 0.0, s1u = 0.0, suu = 0.0, s1v = 0.0, suv = 0.0;
    long m = 0;
    for (const Vec2& p : scan.boundary_points) {
        if (p.x <= 1.05) continue;
        const double u = 1.0 / (p.x - 1.0);
        s11 += 1.0;
        s1u += u;
        suu += u * u;
        s1v += p.y;
        suv += u * p.y;
        ++m;
    }
    if (m >= 2) {
        const double det = s11 * suu - s1u * s1u;
        if (std::abs(det) > 1e-12) {
            scan.fit_alpha = (s1v * suu - suv * s1u) / det;
            scan.fit_beta = (s11 * suv - s1u * s1v) / det;
            double ss = 0.0;
            for (const Vec2& p : scan.boundary_points) {
                if (p.x <= 1.05) continue;
                const double r =
                    p.y - (scan.fit_alpha + scan.fit_beta / (p.x - 1.0));
                ss += r * r;
            }
            scan.fit_rms = std::sqrt(ss / static_cast<double>(m));
        }
    }
    return scan;
}

bool intro_1d_feasible(const std::function<double(double)>& f, double fprime0) {
    if (std::abs(f(0.0)) > kDataZeroTol) return false;
    if (fprime0 < -kDataZeroTol) return false;
    const int n = 4096;
    for (int k = 1; k < n; ++k) {
        if (f(static_cast<double>(k) / n) < -kDataZeroTol) return false;
    }
    return true;
}

ScenarioSystem build_paper_system(const ConstantData& f) {
    ScenarioSystem sys;
    sys.name = "paper-2d";
    sys.domain_dim = 2;
    sys.fiber_dim = 2;
    sys.n_constraints = 4;
    sys.data_lipschitz = 0.0;
    sys.data_bound = f.bound();
    sys.rows = [f](Vec2, long i, long j) {
        if (i == 0 && j == 0) {
            throw BadScenario("paper-2d generic rows evaluated at the origin");
        }
        // Direction-only coefficients, computed from the reduced lattice
        // direction so nodes on a common ray carry bitwise-equal rows.
        const long ii = std::abs(i);
        const long jj = std::abs(j);
        const long g = std::gcd(ii, jj);
        const double p = static_cast<double>(ii / g);
        const double q = static_cast<double>(jj / g);
        const double den = (p * p + q * q) * (p * p + q * q);
        const double c = p * p * p * p / den;
        const double s = q * q * q * q / den;
        return std::vector<HalfPlane>{
            HalfPlane({c, s}, f.f1),
            HalfPlane({s, -c}, f.f2),
            HalfPlane({-c, -s}, f.f3),
            HalfPlane({-s, c}, f.f4),
        };
    };
    sys.is_special = [](long i, long j) { return i == 0 && j == 0; };
    sys.special_fiber = [f](Vec2) {
        if (f.f1 < 0.0 || f.f2 < 0.0 || f.f4 < 0.0) return ConvexRegion::never(2);
        ConvexRegion r(2);
        r.add(HalfPlane({-1.0, 0.0}, kOriginScale * f.f3));
        return r;
    };
    return sys;
}

ScenarioSystem build_intro_system(std::function<double(double)> f,
                                  double data_lipschitz, double data_bound) {
    ScenarioSystem sys;
    sys.name = "intro-1d";
    sys.domain_dim = 1;
    sys.fiber_dim = 1;
    sys.n_constraints = 4;
    sys.data_lipschitz = data_lipschitz;
    sys.data_bound = data_bound;
    sys.rows = [f](Vec2 x, long, long) {
        const double v = f(x.x);
        if (x.x > 0.0) {
            return std::vector<HalfPlane>{
                HalfPlane({x.x * x.x, 0.0}, v),
                HalfPlane({-x.x, 0.0}, -v),
            };
        }
        if (x.x < 0.0) {
            return std::vector<HalfPlane>{
                HalfPlane({x.x, 0.0}, v),
                HalfPlane({-x.x * x.x, 0.0}, -v),
            };
        }
        throw BadScenario("intro-1d generic rows evaluated at 0");
    };
    sys.is_special = [](long i, long j) { return i == 0 && j == 0; };
    sys.special_fiber = [f](Vec2) {
        // Every F-coefficient vanishes at 0; the rows degenerate to the data
        // conditions 0 <= f(0) <= 0.
        if (std::abs(f(0.0)) <= kDataZeroTol) return ConvexRegion::full(1);
        return ConvexRegion::never(1);
    };
    return sys;
}

} // namespace glaeser
