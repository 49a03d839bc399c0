#include "boxspace/freegroup.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "boxspace/errors.hpp"

namespace boxspace {

FiniteQuotient FiniteQuotient::trivial(unsigned rank) {
  FiniteQuotient g;
  g.size = 1;
  g.action.assign(2 * rank, std::vector<std::uint32_t>{0});
  return g;
}

}  // namespace boxspace

namespace boxspace::fg {

SchreierData schreier_build(const FiniteQuotient& quotient) {
  const u32 n = quotient.size;
  const unsigned L = quotient.letters();
  if (L == 0 || L % 2 != 0) throw ParameterError("quotient needs letters in inverse pairs");
  for (unsigned l = 0; l < L; ++l)
    if (quotient.action[l].size() != n) throw ParameterError("action table has the wrong size");
  for (unsigned l = 0; l < L; ++l)
    for (u32 x = 0; x < n; ++x)
      if (quotient.action[l ^ 1][quotient.action[l][x]] != x)
        throw ParameterError("action of letter " + std::to_string(l) + " is not inverted by its partner");

  SchreierData sd;
  sd.quotient = quotient;
  constexpr u32 unseen = ~u32{0};
  sd.parent.assign(n, unseen);
  sd.parent_letter.assign(n, 0);
  sd.depth.assign(n, 0);
  sd.parent[0] = 0;
  std::deque<u32> queue{0};
  u32 reached = 1;
  while (!queue.empty()) {
    const u32 c = queue.front();
    queue.pop_front();
    for (unsigned l = 0; l < L; ++l) {
      const u32 d = quotient.action[l][c];
      if (sd.parent[d] != unseen) continue;
      sd.parent[d] = c;
      sd.parent_letter[d] = static_cast<Letter>(l);
      sd.depth[d] = sd.depth[c] + 1;
      ++reached;
      queue.push_back(d);
    }
  }
  if (reached != n)
    throw StructureError("generator images reach a proper subgroup of size " + std::to_string(reached) + " (of " +
                         std::to_string(n) + ")");

  const unsigned r = quotient.rank();
  sd.edge_index.assign(static_cast<std::size_t>(n) * r, -1);
  for (u32 c = 0; c < n; ++c) {
    for (unsigned x = 0; x < r; ++x) {
      const u32 d = quotient.action[2 * x][c];
      const bool tree = (d != 0 && sd.parent[d] == c && sd.parent_letter[d] == 2 * x) ||
                        (c != 0 && sd.parent[c] == d && sd.parent_letter[c] == 2 * x + 1);
      if (tree) continue;
      sd.edge_index[static_cast<std::size_t>(c) * r + x] = static_cast<std::int32_t>(sd.generators.size());
      sd.generators.emplace_back(c, x);
    }
  }
  if (sd.generators.size() != 1 + static_cast<std::size_t>(n) * (r - 1))
    throw StructureError("Schreier rank does not match 1 + |G|(r-1)");
  return sd;
}

Word SchreierData::transversal(u32 coset) const {
  Word w;
  while (coset != 0) {
    w.push_back(parent_letter[coset]);
    coset = parent[coset];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

Word SchreierData::schreier_generator(u32 index) const {
  const auto [c, x] = generators.at(index);
  Word w = transversal(c);
  w.push_back(static_cast<Letter>(2 * x));
  return concat_reduced(w, inverse_word(transversal(quotient.action[2 * x][c])));
}

u32 SchreierData::coset_of(const Word& w) const {
  u32 c = 0;
  for (Letter l : w) c = quotient.action.at(l)[c];
  return c;
}

HomologyElement homology_identity(u64 q) {
  HomologyElement h;
  h.q = q;
  return h;
}

HomologyElement homology_extend(HomologyElement h, const Word& w, const SchreierData& sd) {
  const unsigned r = sd.rank();
  auto bump = [&](std::int32_t e, bool up) {
    if (e < 0) return;
    auto& v = h.vec[static_cast<u32>(e)];
    v = up ? (v + 1) % h.q : (v + h.q - 1) % h.q;
    if (v == 0) h.vec.erase(static_cast<u32>(e));
  };
  for (Letter l : w) {
    const unsigned x = l >> 1;
    if ((l & 1) == 0) {
      bump(sd.edge_index[static_cast<std::size_t>(h.coset) * r + x], true);
      h.coset = sd.quotient.action[l][h.coset];
    } else {
      const u32 prev = sd.quotient.action[l][h.coset];
      bump(sd.edge_index[static_cast<std::size_t>(prev) * r + x], false);
      h.coset = prev;
    }
  }
  return h;
}

HomologyElement homology_map(const Word& w, const SchreierData& sd, u64 q) {
  return homology_extend(homology_identity(q), w, sd);
}

HomologyWalker::HomologyWalker(const SchreierData& sd, u64 q) : sd_(&sd), q_(q), counts_(sd.kernel_rank(), 0) {}

void HomologyWalker::bump(std::int32_t edge, bool up) {
  if (edge < 0) return;
  auto& v = counts_[static_cast<std::size_t>(edge)];
  const bool was_zero = v == 0;
  v = up ? (v + 1) % q_ : (v + q_ - 1) % q_;
  if (was_zero && v != 0) ++nonzero_;
  if (!was_zero && v == 0) --nonzero_;
}

void HomologyWalker::push(Letter l) {
  const unsigned x = l >> 1;
  const unsigned r = sd_->rank();
  Step s{coset_, -1, (l & 1) == 0};
  if (s.positive) {
    s.edge = sd_->edge_index[static_cast<std::size_t>(coset_) * r + x];
    coset_ = sd_->quotient.action[l][coset_];
  } else {
    const u32 prev = sd_->quotient.action[l][coset_];
    s.edge = sd_->edge_index[static_cast<std::size_t>(prev) * r + x];
    coset_ = prev;
  }
  bump(s.edge, s.positive);
  stack_.push_back(s);
}

void HomologyWalker::pop() {
  const Step s = stack_.back();
  stack_.pop_back();
  bump(s.edge, !s.positive);
  coset_ = s.prev_coset;
}

FiberContext FiberContext::make(u64 q, unsigned n, std::optional<unsigned> k, u64 p) {
  FiberContext ctx;
  ctx.q = q;
  ctx.n = n;
  ctx.k = k;
  ctx.gens = quat::enumerate_Sp(p);
  const unsigned top = std::max(n, k.value_or(0));
  if (top == 0) return ctx;
  const auto params = zmod::LpsParams::make(p, q, top, std::max(top, zmod::kDefaultMaxLevel));
  if (n > 0) ctx.letters_n = psl::lps_generators(ctx.gens, q, n, params.epsilon_at(n));
  if (k) {
    if (*k == 0) throw ParameterError("homology level k must be >= 1");
    const auto letters_k = psl::lps_generators(ctx.gens, q, *k, params.epsilon_at(*k));
    const auto closure = psl::quotient_from_generators(letters_k);
    ctx.schreier = std::make_shared<const SchreierData>(schreier_build(closure.quotient));
  }
  return ctx;
}

bool FiberImage::trivial() const {
  return (!matrix || matrix->is_identity()) && (!homology || homology->is_trivial());
}

FiberImage fiber_map(const Word& w, const FiberContext& ctx) {
  FiberImage img;
  const Word r = reduce_word(w);
  if (ctx.n > 0) img.matrix = psl::embed_word(r, ctx.letters_n);
  if (ctx.schreier) img.homology = homology_map(r, *ctx.schreier, ctx.q);
  return img;
}

namespace {

struct BallSearch {
  const FiberContext& ctx;
  unsigned m;
  unsigned letters;
  std::vector<psl::PglMat> mats;
  std::optional<HomologyWalker> walker;
  Word w;
  std::vector<u64> exact;

  BallSearch(const FiberContext& c, unsigned radius) : ctx(c), m(radius), exact(radius + 1, 0) {
    letters = static_cast<unsigned>(ctx.gens.elements.size());
    if (ctx.n > 0) mats.push_back(psl::PglMat::identity(ctx.q, ctx.n));
    if (ctx.schreier) walker.emplace(*ctx.schreier, ctx.q);
  }

  bool trivial() const { return (mats.empty() || mats.back().is_identity()) && (!walker || walker->trivial()); }

  void run() {
    if (trivial()) ++exact[w.size()];
    if (w.size() == m) return;
    for (unsigned l = 0; l < letters; ++l) {
      if (!w.empty() && w.back() == inverse_letter(static_cast<Letter>(l))) continue;
      w.push_back(static_cast<Letter>(l));
      if (!mats.empty()) mats.push_back(mats.back() * ctx.letters_n[l]);
      if (walker) walker->push(static_cast<Letter>(l));
      run();
      if (walker) walker->pop();
      if (!mats.empty()) mats.pop_back();
      w.pop_back();
    }
  }
};

u64 ball_size(unsigned rank, unsigned m) {
  u64 total = 0;
  for (unsigned i = 0; i <= m; ++i) total += reduced_word_count(rank, i);
  return total;
}

}  // namespace

LoopCounts loop_count_words(const FiberContext& ctx, unsigned m, u64 ball_cap) {
  const unsigned rank = ctx.gens.rank();
  if (m > 40 || ball_size(rank, m) > ball_cap)
    throw ResourceError("word ball of radius " + std::to_string(m) + " exceeds cap " + std::to_string(ball_cap));
  BallSearch search(ctx, m);
  search.run();
  LoopCounts out;
  out.exact = search.exact;
  u64 acc = 0;
  for (unsigned i = 0; i <= m; ++i) {
    acc += out.exact[i];
    out.cumulative.push_back(acc);
    out.parity.push_back(out.exact[i] + (i >= 2 ? out.parity[i - 2] : 0));
  }
  return out;
}

std::optional<unsigned> shortest_kernel_word(const FiberContext& ctx, unsigned max_len, u64 ball_cap) {
  const auto counts = loop_count_words(ctx, max_len, ball_cap);
  for (unsigned i = 1; i <= max_len; ++i)
    if (counts.exact[i] > 0) return i;
  return std::nullopt;
}

}  // namespace boxspace::fg
