#include "boxspace/simd.hpp"

#include <atomic>

#include "boxspace/errors.hpp"

namespace boxspace::simd {
namespace {

// -1: no override
std::atomic<int> forced{-1};

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
      return avx2_kernels() != nullptr && __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::neon:
      return neon_kernels() != nullptr;
  }
  return false;
}

Isa detect_isa() {
  if (isa_available(Isa::avx2)) return Isa::avx2;
  if (isa_available(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

const Kernels& kernels_for(Isa isa) {
  if (!isa_available(isa)) throw UnsupportedInput("ISA " + isa_name(isa) + " is not available on this machine");
  switch (isa) {
    case Isa::avx2:
      return *avx2_kernels();
    case Isa::neon:
      return *neon_kernels();
    case Isa::scalar:
      break;
  }
  return scalar_kernels();
}

const Kernels& active() {
  const int f = forced.load(std::memory_order_relaxed);
  if (f >= 0) return kernels_for(static_cast<Isa>(f));
  static const Kernels& best = kernels_for(detect_isa());
  return best;
}

void force_isa(std::optional<Isa> isa) {
  if (isa && !isa_available(*isa)) throw UnsupportedInput("ISA " + isa_name(*isa) + " is not available on this machine");
  forced.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

std::string isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

std::optional<Isa> parse_isa(const std::string& name) {
  if (name == "scalar") return Isa::scalar;
  if (name == "avx2") return Isa::avx2;
  if (name == "neon") return Isa::neon;
  return std::nullopt;
}

}  // namespace boxspace::simd
