#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "boxspace/quaternion.hpp"
#include "boxspace/quotient.hpp"
#include "boxspace/word.hpp"
#include "boxspace/zmod.hpp"

namespace boxspace::psl {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using Key = std::array<u64, 4>;

inline constexpr u64 kDefaultElementCap = 10'000'000;

// 2x2 matrix over Z/q^level with unit determinant, modulo scalars. Stored scaled so
// that the first unit entry in the order a, b, c, d equals 1.
class PglMat {
 public:
  static PglMat make(i64 a, i64 b, i64 c, i64 d, u64 q, unsigned level);
  static PglMat identity(u64 q, unsigned level);

  u64 a() const { return e_[0]; }
  u64 b() const { return e_[1]; }
  u64 c() const { return e_[2]; }
  u64 d() const { return e_[3]; }
  u64 q() const { return q_; }
  unsigned level() const { return level_; }
  u64 modulus() const { return mod_; }
  const Key& key() const { return e_; }

  u64 det() const;
  // Determinant is a square unit: the class lies in PSL(2, q^level).
  bool in_psl() const;
  bool is_identity() const;
  PglMat inverse() const;
  PglMat pow(u64 e) const;

  friend PglMat operator*(const PglMat& x, const PglMat& y);
  friend bool operator==(const PglMat& x, const PglMat& y) { return x.e_ == y.e_ && x.mod_ == y.mod_; }
  friend bool operator<(const PglMat& x, const PglMat& y) { return x.e_ < y.e_; }

 private:
  PglMat(const Key& e, u64 q, unsigned level, u64 mod) : e_(e), q_(q), level_(level), mod_(mod) {}
  static PglMat canonical(u64 a, u64 b, u64 c, u64 d, u64 q, unsigned level, u64 mod);

  Key e_;
  u64 q_;
  unsigned level_;
  u64 mod_;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept;
};

PglMat commutator(const PglMat& x, const PglMat& y);

// Entrywise reduction to level k (1 <= k <= level).
PglMat reduce(const PglMat& g, unsigned k);

// [[x0+x1 eps, x2+x3 eps], [-x2+x3 eps, x0-x1 eps]] mod q^n. Throws if eps^2 != -1.
PglMat lps_embed(const quat::Quat& x, u64 q, unsigned n, u64 eps);
// One matrix per letter of gens.
std::vector<PglMat> lps_generators(const quat::GeneratorSet& gens, u64 q, unsigned n, u64 eps);
PglMat embed_word(const Word& w, const std::vector<PglMat>& letter_images);

u64 psl_order(u64 q, unsigned n);
// Counts PSL classes by running over all 4-tuples mod q^n; q^(4n) must be small.
u64 psl_bruteforce_count(u64 q, unsigned n);

struct Subgroup {
  std::vector<PglMat> elements;  // BFS insertion order, identity first
  std::vector<Key> sorted_keys;

  std::size_t size() const { return elements.size(); }
  bool contains(const PglMat& g) const;
  bool same_elements(const Subgroup& other) const { return sorted_keys == other.sorted_keys; }
};

Subgroup subgroup_closure(const std::vector<PglMat>& gens, u64 cap = kDefaultElementCap);

// Closure with the right action of a letter list (letters must pair as g, g^-1).
struct QuotientClosure {
  FiniteQuotient quotient;
  std::vector<PglMat> elements;
};
QuotientClosure quotient_from_generators(const std::vector<PglMat>& letter_images, u64 cap = kDefaultElementCap);

struct CongruenceKernel {
  u64 q = 0;
  unsigned n = 0, k = 0;
  std::vector<PglMat> elements;
  std::vector<Key> sorted_keys;
  bool analysed = false;
  bool abelian = false;
  u64 exponent = 0;
  // D^i U^j L^l (i, j, l < q^(n-k)) are pairwise distinct and exhaust the kernel.
  bool product_of_cyclics = false;
};

// Kernel of reduction PGL(2, q^n) -> PGL(2, q^k): classes a = 1, b, c, d - 1 ≡ 0 mod q^k.
CongruenceKernel kernel_enumerate(u64 q, unsigned n, unsigned k, u64 cap = kDefaultElementCap, bool analyse = true);
// Same kernel obtained by filtering a full element list; the independent oracle.
std::vector<PglMat> kernel_by_filter(const std::vector<PglMat>& group, unsigned k);
// diag(1+q^k, 1-q^k), [[1,q^k],[0,1]], [[1,0],[q^k,1]] at level n.
std::array<PglMat, 3> kernel_generators(u64 q, unsigned n, unsigned k);
std::array<PglMat, 3> mgen_generators(u64 q, unsigned n);
// All elements of PSL(2, q^n), by filtering 4-tuples; q^(4n) must be small.
std::vector<PglMat> psl_enumerate(u64 q, unsigned n);

struct CommutatorCheck {
  unsigned k;
  bool equal;
  PglMat commutator;
  PglMat target;
};
// [[1,q^(k+1)],[0,1]] and [[1,0],[q^(n-k-2),1]] against diag(1+q^(n-1), 1-q^(n-1)).
CommutatorCheck commutator_identity(u64 q, unsigned n, unsigned k);

struct GammaReport {
  bool equal = false;
  std::size_t generated = 0;
  std::size_t expected = 0;
  std::size_t generator_count = 0;
};
// Subgroup generated by q-th powers and commutators of K_k, compared with K_(k+1).
GammaReport gamma_image_check(u64 q, unsigned n, unsigned k, u64 cap = kDefaultElementCap);

}  // namespace boxspace::psl
