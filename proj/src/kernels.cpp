#include "glaeser/kernels.hpp"

#include <limits>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define GLAESER_HAVE_AVX2_TARGET 1
#endif

namespace glaeser::kernels {

namespace {

double min_sqdist_scalar(const double* xs, const double* ys, std::size_t n,
                         double px, double py) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - px;
        const double dy = ys[i] - py;
        const double d = dx * dx + dy * dy;
        if (d < best) best = d;
    }
    return best;
}

double max_dot_scalar(const double* xs, const double* ys, std::size_t n,
                      double dx, double dy) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double d = dx * xs[i] + dy * ys[i];
        if (d > best) best = d;
    }
    return best;
}

#ifdef GLAESER_HAVE_AVX2_TARGET

__attribute__((target("avx2,fma"))) double min_sqdist_avx2(
    const double* xs, const double* ys, std::size_t n, double px, double py) {
    const __m256d vpx = _mm256_set1_pd(px);
    const __m256d vpy = _mm256_set1_pd(py);
    __m256d vbest = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vpx);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vpy);
        const __m256d d = _mm256_fmadd_pd(dy, dy, _mm256_mul_pd(dx, dx));
        vbest = _mm256_min_pd(vbest, d);
    }
    alignas(32) double lane[4];
    _mm256_store_pd(lane, vbest);
    double best = lane[0];
    for (int k = 1; k < 4; ++k) {
        if (lane[k] < best) best = lane[k];
    }
    const double tail = min_sqdist_scalar(xs + i, ys + i, n - i, px, py);
    return tail < best ? tail : best;
}

__attribute__((target("avx2,fma"))) double max_dot_avx2(const double* xs,
                                                        const double* ys,
                                                        std::size_t n, double dx,
                                                        double dy) {
    const __m256d vdx = _mm256_set1_pd(dx);
    const __m256d vdy = _mm256_set1_pd(dy);
    __m256d vbest = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_fmadd_pd(vdy, _mm256_loadu_pd(ys + i),
                                          _mm256_mul_pd(vdx, _mm256_loadu_pd(xs + i)));
        vbest = _mm256_max_pd(vbest, d);
    }
    alignas(32) double lane[4];
    _mm256_store_pd(lane, vbest);
    double best = lane[0];
    for (int k = 1; k < 4; ++k) {
        if (lane[k] > best) best = lane[k];
    }
    const double tail = max_dot_scalar(xs + i, ys + i, n - i, dx, dy);
    return tail > best ? tail : best;
}

bool cpu_has_avx2() {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

#endif // GLAESER_HAVE_AVX2_TARGET

using MinSqdistFn = double (*)(const double*, const double*, std::size_t, double, double);
using MaxDotFn = double (*)(const double*, const double*, std::size_t, double, double);

struct Dispatch {
    MinSqdistFn min_sqdist = &min_sqdist_scalar;
    MaxDotFn max_dot = &max_dot_scalar;
    const char* backend = "scalar";

    Dispatch() {
#ifdef GLAESER_HAVE_AVX2_TARGET
        if (cpu_has_avx2()) {
            min_sqdist = &min_sqdist_avx2;
            max_dot = &max_dot_avx2;
            backend = "avx2";
        }
#endif
    }
};

const Dispatch& dispatch() {
    static const Dispatch d;
    return d;
}

} // namespace

double min_sqdist(const double* xs, const double* ys, std::size_t n, double px,
                  double py) {
    return dispatch().min_sqdist(xs, ys, n, px, py);
}

double max_dot(const double* xs, const double* ys, std::size_t n, double dx,
               double dy) {
    return dispatch().max_dot(xs, ys, n, dx, dy);
}

const char* active_backend() { return dispatch().backend; }

} // namespace glaeser::kernels
