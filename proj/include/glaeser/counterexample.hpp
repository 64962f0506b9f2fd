#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "glaeser/bundle.hpp"

namespace glaeser {

/// Constant data (f1, f2, f3, f4) of the planar scenario.
struct ConstantData {
    double f1 = 0.0, f2 = 0.0, f3 = 0.0, f4 = 0.0;

    double bound() const;
};

using Mat2 = std::array<std::array<double, 2>, 2>;

/// B(theta) = [[cos^4, sin^4], [sin^4, -cos^4]]; the direction-dependent
/// coefficient matrix of the planar scenario (theta in [0, pi/2]).
Mat2 B_matrix(double theta);

/// Operator (spectral) norm of B(theta)^{-1}; equals (cos^8 + sin^8)^{-1/2}.
double b_inv_norm(double theta);

/// Initial-fiber nonemptiness test: unconditionally true at x = 0, and
/// (-f3 <= f1 and -f4 <= f2) away from 0.
bool h0_nonempty(const ConstantData& f, Vec2 x);

/// V(y1, a) = (M - (1-a)^2 y1) / a^2; the lower bound on y2 imposed by the
/// tangent-plane family at parameter a = sin^2(theta).
double V(double y1, double a, double M);

/// W(y1) = M + M^2 / (y1 - M); the envelope max_a V(y1, a), a hyperbola.
double W(double y1, double M);

/// Membership in the analytic once-refined origin fiber H1(0), with a
/// per-inequality tolerance (unit-normal scaling throughout).
bool h1_origin_contains(Vec2 y, const ConstantData& f, double tol = 0.0);

/// Outer polygonal approximation of H1(0) by n_tangents supporting
/// halfplanes of the hyperbola branch, realized in the window (empty polygon
/// when H1(0) is empty).
Polygon h1_origin_polygon(const ConstantData& f, const Box& window,
                          int n_tangents = 2048);

struct Feasibility {
    bool feasible = false;
    std::string cause;
    std::optional<Vec2> witness;
};

/// Exact decision of "does the system with this constant data admit a
/// continuous solution": origin data signs, off-origin fiber nonemptiness,
/// and nonemptiness of H1(0) via its upper-right corner against the
/// hyperbola (the corner maximizes both coordinates, so the corner test is
/// exact).  Returns a witness point in H1(0) when feasible.
Feasibility feasibility_constant(const ConstantData& f);

struct BoundaryScan {
    int resolution = 0;
    Box range;
    /// Row-major verdict grid over (f2, f4); 1 = feasible.
    std::vector<std::uint8_t> feasible;
    /// Midpoints of verdict-flipping lattice edges (marching squares).
    std::vector<Vec2> boundary_points;
    /// Least-squares fit of the boundary to f4 = alpha + beta / (f2 - 1).
    double fit_alpha = 0.0;
    double fit_beta = 0.0;
    double fit_rms = 0.0;
};

BoundaryScan boundary_scan(double f1 = 3.0, double f3 = -1.0,
                           Box range = Box{{1.0, 1.0}, {3.0, 3.0}},
                           int resolution = 128);

/// Feasibility of the one-dimensional scenario on [-1, 1]: f(0) = 0 and
/// f'(0) >= 0 and f >= 0 on (0, 1).  The last condition makes the fibers
/// over (0, 1) nonempty; it is implied by the first two only when f does not
/// dip negative away from 0 (e.g. f(x) = -x^2 satisfies both yet has empty
/// fibers on (0, 1)).
bool intro_1d_feasible(const std::function<double(double)>& f, double fprime0);

/// Scenario over E = [0,1]^2: generic rows B(x)y <= (f1, f2),
/// -B(x)y <= (f3, f4) with the quartic-over-quadratic-squared coefficients,
/// and the origin override {0 <= f1, f2, f4} and -10^6 y1 <= f3.
ScenarioSystem build_paper_system(const ConstantData& f);

/// One-dimensional scenario over [-1, 1] with indicator-gated rows
/// x^2 1_{x>=0} F <= f <= x 1_{x>=0} F and x 1_{x<=0} F <= f <= x^2 1_{x<=0} F;
/// the origin rows all have zero F-coefficient and become the special fiber
/// (all of R when f(0) = 0, empty otherwise).
ScenarioSystem build_intro_system(std::function<double(double)> f,
                                  double data_lipschitz, double data_bound);

} // namespace glaeser
