#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace boxspace::simd {

enum class Isa { scalar, avx2, neon };

// Vector kernels used by the Lanczos solver. spmv computes y = A x for the 0/1
// adjacency matrix in CSR form.
struct Kernels {
  Isa isa;
  double (*dot)(const double* x, const double* y, std::size_t n);
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  void (*scale)(double a, double* x, std::size_t n);
  double (*sum_sq)(const double* x, std::size_t n);
  void (*spmv)(std::uint32_t rows, const std::uint64_t* off, const std::uint32_t* adj, const double* x, double* y);
};

const Kernels& scalar_kernels();
// nullptr when the target was not compiled in.
const Kernels* avx2_kernels();
const Kernels* neon_kernels();

bool isa_available(Isa isa);
Isa detect_isa();
const Kernels& kernels_for(Isa isa);
// Kernels of the forced ISA if set, else the best detected one.
const Kernels& active();
void force_isa(std::optional<Isa> isa);
std::string isa_name(Isa isa);
std::optional<Isa> parse_isa(const std::string& name);

}  // namespace boxspace::simd
