#include "boxspace/simd.hpp"

namespace boxspace::simd {
namespace {

double dot(const double* x, const double* y, std::size_t n) {
  double s = 0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

double sum_sq(const double* x, std::size_t n) { return dot(x, x, n); }

void spmv(std::uint32_t rows, const std::uint64_t* off, const std::uint32_t* adj, const double* x, double* y) {
  for (std::uint32_t r = 0; r < rows; ++r) {
    double s = 0;
    for (std::uint64_t j = off[r]; j < off[r + 1]; ++j) s += x[adj[j]];
    y[r] = s;
  }
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{Isa::scalar, dot, axpy, scale, sum_sq, spmv};
  return k;
}

}  // namespace boxspace::simd
