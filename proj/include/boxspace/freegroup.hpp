#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "boxspace/psl.hpp"
#include "boxspace/quotient.hpp"
#include "boxspace/word.hpp"

namespace boxspace::fg {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

inline constexpr u64 kDefaultBallCap = 50'000'000;

// Coset table for F_r -> G with a BFS transversal and the Schreier basis of the kernel N.
struct SchreierData {
  FiniteQuotient quotient;
  std::vector<u32> parent;          // parent[0] == 0
  std::vector<Letter> parent_letter;  // coset c = parent[c] * parent_letter[c]
  std::vector<u32> depth;
  // edge_index[c * rank + x] is the Schreier generator of the labelled edge c --x--> c x, -1 on tree edges.
  std::vector<std::int32_t> edge_index;
  std::vector<std::pair<u32, unsigned>> generators;  // (coset, positive generator) per index

  unsigned rank() const { return quotient.rank(); }
  u32 kernel_rank() const { return static_cast<u32>(generators.size()); }
  Word transversal(u32 coset) const;
  // t_c x t_(cx)^-1, reduced.
  Word schreier_generator(u32 index) const;
  u32 coset_of(const Word& w) const;
};

// Throws StructureError naming the reached subgroup when the images do not generate.
SchreierData schreier_build(const FiniteQuotient& quotient);

// Element of F_r / Gamma(N), Gamma(N) = N^q [N, N]: the coset of N and the
// Z_q-vector of Schreier-generator counts along the path of a representative word.
struct HomologyElement {
  u32 coset = 0;
  std::map<u32, u64> vec;  // nonzero entries only
  u64 q = 0;

  bool is_trivial() const { return coset == 0 && vec.empty(); }
  friend bool operator==(const HomologyElement&, const HomologyElement&) = default;
};

HomologyElement homology_identity(u64 q);
HomologyElement homology_extend(HomologyElement h, const Word& w, const SchreierData& sd);
HomologyElement homology_map(const Word& w, const SchreierData& sd, u64 q);

// Dense incremental version for ball searches: push/pop letters.
class HomologyWalker {
 public:
  HomologyWalker(const SchreierData& sd, u64 q);
  void push(Letter l);
  void pop();
  bool trivial() const { return coset_ == 0 && nonzero_ == 0; }
  u32 coset() const { return coset_; }

 private:
  struct Step {
    u32 prev_coset;
    std::int32_t edge;
    bool positive;
  };
  void bump(std::int32_t edge, bool up);

  const SchreierData* sd_;
  u64 q_;
  u32 coset_ = 0;
  std::vector<u64> counts_;
  u64 nonzero_ = 0;
  std::vector<Step> stack_;
};

// Everything needed to evaluate w -> (PSL(2, q^n) image, homology element at level k).
// n == 0 drops the PSL condition; k absent drops the homology condition.
struct FiberContext {
  u64 q = 29;
  unsigned n = 1;
  std::optional<unsigned> k;
  quat::GeneratorSet gens;
  std::vector<psl::PglMat> letters_n;
  std::shared_ptr<const SchreierData> schreier;

  static FiberContext make(u64 q, unsigned n, std::optional<unsigned> k, u64 p = 5);
};

struct FiberImage {
  std::optional<psl::PglMat> matrix;
  std::optional<HomologyElement> homology;

  bool trivial() const;
};

FiberImage fiber_map(const Word& w, const FiberContext& ctx);

struct LoopCounts {
  std::vector<u64> exact;       // exact[m]: reduced words of length m in the kernel
  std::vector<u64> cumulative;  // |w| <= m
  std::vector<u64> parity;      // |w| <= m, |w| ≡ m mod 2
};

// Kernel words of N_n ∩ Gamma(N_k) in the ball of radius m (identity included).
LoopCounts loop_count_words(const FiberContext& ctx, unsigned m, u64 ball_cap = kDefaultBallCap);

// Shortest nontrivial kernel word length, searched up to max_len (nullopt if none found).
std::optional<unsigned> shortest_kernel_word(const FiberContext& ctx, unsigned max_len, u64 ball_cap = kDefaultBallCap);

}  // namespace boxspace::fg
