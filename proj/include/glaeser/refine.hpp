#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "glaeser/bundle.hpp"

namespace glaeser {

/// Parameters of the discretized refinement operator.  A point z survives in
/// the fiber over x only if every neighbor fiber K(y) within neighbor_radius
/// comes within epsilon_of_r(|x - y|) = kappa * |x - y| of z; the engine
/// realizes this as halfplane-offset dilation of the neighbor fibers.
struct RefinementConfig {
    double kappa = 1.0;
    double neighbor_radius = std::numeric_limits<double>::infinity();
    int max_iterations = 8;
    double stabilization_tol = 1e-9;
    /// Fiber window used to realize fibers while refining and to price an
    /// emptied fiber in the change metric.
    Box window = Box::square(8.0);
    /// Slack under which an incoming dilated halfplane counts as redundant.
    double support_tol = 1e-9;

    double epsilon_of_r(double r) const { return kappa * r; }
};

/// kappa = 4 * (data Lipschitz bound) + 1; the factor 4 is the uniform bound
/// on the inverse coefficient matrix of the planar scenario, which controls
/// how fiber geometry responds to data perturbations.
double default_kappa(const ScenarioSystem& system);

struct RefinementReport {
    int iterations_run = 0;
    bool stabilized = false;
    std::vector<long> empty_nodes;
    /// Max fiber change per iteration (exact Hausdorff between the realized
    /// polygons; an emptied fiber prices at the window diameter).
    std::vector<double> per_iteration_change;
    /// Same metric restricted to non-special nodes.
    std::vector<double> per_iteration_change_off_special;
};

/// One application of the refinement operator; the input bundle is the
/// source of both the targets and the neighbor fibers.  Special-point fibers
/// are refined but never act as neighbors of other nodes (the continuum
/// refinement at x != 0 never sees the origin once delta < |x|).  Any empty
/// non-special fiber empties every node.
Bundle refine_once(const Bundle& bundle, const RefinementConfig& config);

/// Iterate the operator until the max fiber change drops to
/// stabilization_tol or max_iterations is hit.  Neighbor constraints are
/// sourced from the initial bundle throughout: offset dilation is transitive
/// along the triangle inequality, so re-sourcing from later iterates can
/// only reproduce already-implied constraints, and the iteration provably
/// reaches its fixed point after one pass (the second pass verifies it).
std::pair<Bundle, RefinementReport> refine_to_stable(const Bundle& bundle,
                                                     const RefinementConfig& config);

/// Direct quantifier-sweep oracle (test use only, <= 33^2 nodes): keep the
/// sampled fiber points z such that for every eps in eps_list some delta in
/// delta_list has dist(z, K(y)) <= eps for all nodes y with |y - x| <= delta.
/// Returns convex hulls of the surviving point clouds; the raw clouds are
/// exposed through `clouds` when non-null.
Bundle brute_force_refine(const Bundle& bundle, const Box& window,
                          const std::vector<double>& eps_list,
                          const std::vector<double>& delta_list,
                          std::vector<std::vector<Vec2>>* clouds = nullptr);

/// Exact Hausdorff distance between convex polygons (vertex-to-polygon
/// distances both ways); callers handle empties.
double polygon_hausdorff(const Polygon& a, const Polygon& b);

} // namespace glaeser
