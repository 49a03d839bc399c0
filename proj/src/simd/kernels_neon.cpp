#include "boxspace/simd.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace boxspace::simd {
namespace {

double dot(const double* x, const double* y, std::size_t n) {
  float64x2_t a0 = vdupq_n_f64(0), a1 = vdupq_n_f64(0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    a0 = vfmaq_f64(a0, vld1q_f64(x + i), vld1q_f64(y + i));
    a1 = vfmaq_f64(a1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
  }
  double s = vaddvq_f64(vaddq_f64(a0, a1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale(double a, double* x, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
  for (; i < n; ++i) x[i] *= a;
}

double sum_sq(const double* x, std::size_t n) { return dot(x, x, n); }

// no gather on NEON; pairs of loads keep two accumulators busy
void spmv(std::uint32_t rows, const std::uint64_t* off, const std::uint32_t* adj, const double* x, double* y) {
  for (std::uint32_t r = 0; r < rows; ++r) {
    std::uint64_t j = off[r];
    const std::uint64_t end = off[r + 1];
    float64x2_t acc = vdupq_n_f64(0);
    for (; j + 2 <= end; j += 2) {
      const double pair[2] = {x[adj[j]], x[adj[j + 1]]};
      acc = vaddq_f64(acc, vld1q_f64(pair));
    }
    double s = vaddvq_f64(acc);
    for (; j < end; ++j) s += x[adj[j]];
    y[r] = s;
  }
}

}  // namespace

const Kernels* neon_kernels() {
  static const Kernels k{Isa::neon, dot, axpy, scale, sum_sq, spmv};
  return &k;
}

}  // namespace boxspace::simd

#else

namespace boxspace::simd {
const Kernels* neon_kernels() { return nullptr; }
}  // namespace boxspace::simd

#endif
