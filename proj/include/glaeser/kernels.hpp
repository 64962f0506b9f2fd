#pragma once

#include <cstddef>

namespace glaeser::kernels {

/// Smallest squared distance from (px, py) to the point set {(xs[i], ys[i])}.
/// n == 0 returns +infinity.
double min_sqdist(const double* xs, const double* ys, std::size_t n, double px,
                  double py);

/// Largest dot product (dx, dy) . (xs[i], ys[i]).  n == 0 returns -infinity.
double max_dot(const double* xs, const double* ys, std::size_t n, double dx,
               double dy);

/// Name of the dispatched implementation: "avx2" or "scalar".
const char* active_backend();

} // namespace glaeser::kernels
