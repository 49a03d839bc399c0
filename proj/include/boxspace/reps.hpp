#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace boxspace::reps {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

inline constexpr u64 kDefaultGroupCap = 1'000'000;

// Upper triangular [[a, b], [0, a^-1]] mod q^n with a = (1+q^k)^beta, b = q^k t.
// Element index = beta * side + t, side = q^(n-k).
struct BorelGroup {
  u64 q = 0;
  unsigned k = 0, n = 0;
  u64 mod = 0;   // q^n
  u64 side = 0;  // q^(n-k)
  u32 order = 0;
  std::vector<u64> a, b;
  std::vector<u32> mult;

  static BorelGroup make(u64 q, unsigned k, unsigned n, u64 cap = kDefaultGroupCap);

  u32 mul(u32 x, u32 y) const { return mult[static_cast<std::size_t>(x) * order + y]; }
  u32 inverse(u32 x) const;
  u32 index(u64 beta, u64 t) const { return static_cast<u32>((beta % side) * side + (t % side)); }
  u64 beta(u32 x) const { return x / side; }
  u64 t(u32 x) const { return x % side; }
  bool abelian() const;
  // Index of the image under reduction to B_{k, n-1}.
  u32 reduce_index(u32 x, const BorelGroup& lower) const;
};

enum class IrrepKind { pi_rho, lifted_rho, base_character };

std::string kind_name(IrrepKind k);

// Monomial representation: g sends basis vector i to e(phase/q^n) times basis vector perm[i].
struct Irrep {
  IrrepKind kind = IrrepKind::pi_rho;
  int j = 0, jp = 0;
  std::string lineage;
  u32 dim = 1;
  u32 order = 0;
  u64 mod = 0;
  std::vector<u32> perm;    // order * dim
  std::vector<u64> phase;   // order * dim

  std::complex<double> character(u32 g) const;
  bool is_identity_at(u32 g) const;
};

Irrep build_rho(const BorelGroup& G, u64 j);
// The representation used: xi_x -> e(a^-1 b x / q^n) xi_(a^-2 x), x ≡ j mod q^k in Z_(q^(n-k)).
Irrep build_pi(const BorelGroup& G, u64 j);
// xi_x -> e(a b x / q^n) xi_(a^2 x); composes in reverse order.
Irrep build_pi_literal(const BorelGroup& G, u64 j);
Irrep tensor(const Irrep& pi, const Irrep& rho);
Irrep lift(const Irrep& lower, const BorelGroup& lower_group, const BorelGroup& G);

// Exact check of pi(gh) = pi(g) pi(h) (or = pi(h) pi(g) when reversed).
bool homomorphism_on(const Irrep& pi, const BorelGroup& G, u32 g, u32 h, bool reversed = false);

struct LevelInfo {
  unsigned l = 0;
  bool saturated = false;  // l >= n - 2k, predicted dimension clamped to 1
  bool monotone = true;
  u64 predicted_dim = 1;
  bool matches = false;
};
LevelInfo dimension_by_level(const BorelGroup& G, const Irrep& pi);

struct CharacterTable {
  std::vector<Irrep> irreps;
  u64 sum_dim_sq = 0;
  double orthonormality_defect = 0;
  bool complete = false;
  bool levels_ok = false;
  bool homomorphisms_ok = false;
  double unitarity_defect = 0;
  std::map<u32, u32> dimension_counts;

  void write_csv(std::ostream& os, const BorelGroup& G) const;
};

// Throws StructureError when the dimensions do not account for |B|.
CharacterTable irrep_inventory(const BorelGroup& G, std::uint64_t seed = 0);

// Irrep dimensions of a group given by its multiplication table (identity 0), from
// the eigenvalue multiplicities d^2 of a random Hermitian element of the class algebra.
std::map<u32, u32> brute_force_irreps(u32 order, const std::vector<u32>& table, std::uint64_t seed = 0,
                                      unsigned retries = 6);

}  // namespace boxspace::reps
