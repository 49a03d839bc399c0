#include "boxspace/simd.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

#define BOXSPACE_AVX2 __attribute__((target("avx2,fma")))

namespace boxspace::simd {
namespace {

BOXSPACE_AVX2 double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v), hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

BOXSPACE_AVX2 double dot(const double* x, const double* y, std::size_t n) {
  __m256d a0 = _mm256_setzero_pd(), a1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), a0);
    a1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), a1);
  }
  for (; i + 4 <= n; i += 4) a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), a0);
  double s = hsum(_mm256_add_pd(a0, a1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

BOXSPACE_AVX2 void axpy(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) y[i] += a * x[i];
}

BOXSPACE_AVX2 void scale(double a, double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) x[i] *= a;
}

BOXSPACE_AVX2 double sum_sq(const double* x, std::size_t n) { return dot(x, x, n); }

BOXSPACE_AVX2 void spmv(std::uint32_t rows, const std::uint64_t* off, const std::uint32_t* adj, const double* x,
                        double* y) {
  for (std::uint32_t r = 0; r < rows; ++r) {
    std::uint64_t j = off[r];
    const std::uint64_t end = off[r + 1];
    __m256d acc = _mm256_setzero_pd();
    for (; j + 4 <= end; j += 4) {
      const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(adj + j));
      acc = _mm256_add_pd(acc, _mm256_i32gather_pd(x, idx, 8));
    }
    double s = hsum(acc);
    for (; j < end; ++j) s += x[adj[j]];
    y[r] = s;
  }
}

}  // namespace

const Kernels* avx2_kernels() {
  static const Kernels k{Isa::avx2, dot, axpy, scale, sum_sq, spmv};
  return &k;
}

}  // namespace boxspace::simd

#else

namespace boxspace::simd {
const Kernels* avx2_kernels() { return nullptr; }
}  // namespace boxspace::simd

#endif
