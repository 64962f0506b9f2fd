#pragma once

#include <utility>
#include <vector>

#include "glaeser/bundle.hpp"

namespace glaeser {

/// A grid of fiber points F(x) with piecewise-bilinear interpolation between
/// nodes, plus continuity/residual diagnostics.
struct SelectionField {
    Grid grid;
    std::vector<Vec2> values;
    /// Per-node max constraint violation, filled by verify_selection.
    std::vector<double> residuals;
    /// (distance d, max |F(x) - F(y)| over pairs with |x - y| <= d) for
    /// dyadic d = h, 2h, 4h, ...
    std::vector<std::pair<double, double>> modulus_table;

    /// Bilinear (linear in 1-D) interpolation at an arbitrary domain point.
    Vec2 interpolate(Vec2 x) const;
};

/// Steiner-point selection of a stable bundle: one point per fiber (fiber
/// intersected with the window), continuous in the fibers by the Hausdorff
/// Lipschitz property of the Steiner map.  Throws EmptyFiber naming the
/// first empty node.
SelectionField construct_selection(const Bundle& stable, const Box& window,
                                   int n_dirs = 720);

struct VerifyReport {
    bool pass = false;
    double max_violation_nodes = 0.0;
    double max_violation_fine = 0.0;
    long worst_node = -1;
    Vec2 worst_point{0.0, 0.0};
};

/// Max constraint violation of the selection against the scenario rows, over
/// the grid nodes and over a 4x-finer verification lattice via
/// interpolation; also fills sel.residuals.  Passes iff the max is <= tol.
VerifyReport verify_selection(SelectionField& sel, const ScenarioSystem& system,
                              double tol);

/// Dyadic modulus-of-continuity table (also stored into sel.modulus_table):
/// entries are nondecreasing in d by construction (prefix max).
std::vector<std::pair<double, double>> modulus_of_continuity(SelectionField& sel);

} // namespace glaeser
