#pragma once

#include <cstddef>
#include <vector>

#include "glaeser/geometry.hpp"

namespace glaeser {

/// Convex region in the fiber space: a finite intersection of halfplanes.
/// An empty halfplane list means all of R^dim.  1-D regions (fiber_dim 1)
/// store halfplanes with normal (+-1, 0); only the first coordinate of a
/// point is meaningful for them.
class ConvexRegion {
  public:
    explicit ConvexRegion(int fiber_dim) : dim_(fiber_dim) {
        if (fiber_dim != 1 && fiber_dim != 2) {
            throw DimMismatch("fiber_dim must be 1 or 2");
        }
    }

    /// All of R^dim.
    static ConvexRegion full(int fiber_dim) { return ConvexRegion(fiber_dim); }

    /// A canonical empty region (contradictory pair of halfplanes).
    static ConvexRegion never(int fiber_dim) {
        ConvexRegion r(fiber_dim);
        r.add(HalfPlane({1.0, 0.0}, -1.0));
        r.add(HalfPlane({-1.0, 0.0}, -1.0));
        return r;
    }

    void add(HalfPlane hp) {
        if (dim_ == 1 && hp.normal.y != 0.0) {
            throw DimMismatch("1-D region requires halfplane normal (+-1, 0)");
        }
        planes_.push_back(hp);
    }

    int dim() const { return dim_; }
    const std::vector<HalfPlane>& planes() const { return planes_; }

  private:
    int dim_;
    std::vector<HalfPlane> planes_;
};

/// Halfwidth of the working box standing in for "all of the plane" when an
/// unbounded region must be realized as a polygon (emptiness, distance).
inline constexpr double kWorkingHalfwidth = 1e6;

/// Clip the window box by every halfplane of the region.  For 1-D regions
/// the result is a rectangle spanning the window in y.
Polygon realize(const ConvexRegion& region, const Box& window,
                double clip_tol = 1e-12);

/// True iff the region has no point (decided inside the working box; regions
/// entirely outside |y| <= kWorkingHalfwidth are out of scope by design).
bool is_empty(const ConvexRegion& region);

/// Membership with per-halfplane tolerance.
bool contains(const ConvexRegion& region, Vec2 point, double tol = 1e-9);

/// Euclidean distance from point to the region; 0 for members.
double distance(const ConvexRegion& region, Vec2 point);

/// Set intersection: concatenated halfplane lists.
ConvexRegion intersect(const ConvexRegion& a, const ConvexRegion& b);

/// Outer dilation: every (unit-normal) offset increased by eps.
ConvexRegion dilate(const ConvexRegion& region, double eps);

/// Center of a largest ball inscribed in region `∩` window, found by binary
/// search on the inradius; ties broken by the lexicographically smallest
/// optimal center.
Vec2 chebyshev_center(const ConvexRegion& region, const Box& window);

/// Discretized Steiner point of region `∩` window over n_dirs uniform support
/// directions, projected back onto the region if quadrature drift leaves it.
Vec2 steiner_point(const ConvexRegion& region, const Box& window,
                   int n_dirs = 720);

/// Support value max(direction . y) over region `∩` window.
double support(const ConvexRegion& region, Vec2 direction, const Box& window);

/// Sampled symmetric Hausdorff distance between the window-clipped regions,
/// using n boundary samples of each polygon (exact for convex polygons when
/// n covers the vertices).
double hausdorff_sampled(const ConvexRegion& a, const ConvexRegion& b,
                         const Box& window, std::size_t n = 256);

/// Counterclockwise convex hull of a point cloud (monotone chain); collinear
/// interior points dropped.  Empty input gives the empty polygon.
Polygon convex_hull(std::vector<Vec2> points);

/// H-representation (edge halfplanes) of a nonempty convex polygon.  Point
/// and segment polygons produce degenerate (equality-pair) constraints.
ConvexRegion polygon_to_region(const Polygon& poly);

} // namespace glaeser
