#include <doctest.h>

#include <random>

#include "boxspace/errors.hpp"
#include "boxspace/freegroup.hpp"
#include "boxspace/word.hpp"

using namespace boxspace;
using namespace boxspace::fg;

namespace {

// all three generators act by the nontrivial element of Z/m
FiniteQuotient cyclic_quotient(u32 m) {
  FiniteQuotient f;
  f.size = m;
  f.action.assign(6, std::vector<u32>(m));
  for (unsigned l = 0; l < 6; ++l)
    for (u32 x = 0; x < m; ++x) f.action[l][x] = (l % 2 == 0) ? (x + 1) % m : (x + m - 1) % m;
  return f;
}

}  // namespace

TEST_CASE("reduced words") {
  CHECK(reduce_word({0, 1, 2}) == Word{2});
  CHECK(reduce_word({2, 0, 1, 3}).empty());
  CHECK(is_reduced({0, 2, 1}));
  CHECK_FALSE(is_reduced({0, 2, 3}));
  CHECK(inverse_word({0, 2}) == Word{3, 1});
  CHECK(concat_reduced({0, 2}, {3, 4}) == Word{0, 4});
  CHECK(reduced_word_count(3, 0) == 1);
  CHECK(reduced_word_count(3, 1) == 6);
  CHECK(reduced_word_count(3, 2) == 30);
  CHECK(commutator_word({0}, {2}) == Word{0, 2, 1, 3});
  CHECK(power_word({0, 2}, 2) == Word{0, 2, 0, 2});
}

TEST_CASE("Schreier data of the trivial quotient") {
  const auto sd = schreier_build(FiniteQuotient::trivial(3));
  CHECK(sd.quotient.size == 1);
  CHECK(sd.kernel_rank() == 3);
}

TEST_CASE("Schreier data of Z/2") {
  const auto sd = schreier_build(cyclic_quotient(2));
  CHECK(sd.kernel_rank() == 5);
  for (u32 i = 0; i < sd.kernel_rank(); ++i) {
    const auto w = sd.schreier_generator(i);
    CHECK(sd.coset_of(w) == 0);
    const auto h = homology_map(w, sd, 7);
    REQUIRE(h.vec.size() == 1);
    CHECK(h.vec.begin()->first == i);
    CHECK(h.vec.begin()->second == 1);
  }
}

TEST_CASE("Schreier rank of an order-12 quotient") {
  CHECK(schreier_build(cyclic_quotient(12)).kernel_rank() == 25);
}

TEST_CASE("non-generating images are reported") {
  auto f = cyclic_quotient(4);
  for (unsigned l = 0; l < 6; ++l)
    for (u32 x = 0; x < 4; ++x) f.action[l][x] = (l % 2 == 0) ? (x + 2) % 4 : (x + 2) % 4;
  CHECK_THROWS_AS(schreier_build(f), StructureError);
}

TEST_CASE("homology map is a homomorphism into Z/q^r x| G") {
  const auto sd = schreier_build(cyclic_quotient(3));
  CHECK(homology_map({}, sd, 5).is_trivial());
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    Word a, b;
    for (int i = 0; i < 6; ++i) a.push_back(static_cast<Letter>(rng() % 6));
    for (int i = 0; i < 5; ++i) b.push_back(static_cast<Letter>(rng() % 6));
    a = reduce_word(a);
    b = reduce_word(b);
    // w w^-1 and the commutator-of-kernel-elements trivialities
    CHECK(homology_map(concat_reduced(a, inverse_word(a)), sd, 5).is_trivial());
    CHECK(homology_extend(homology_map(a, sd, 5), b, sd) == homology_map(concat_reduced(a, b), sd, 5));
  }
}

TEST_CASE("incremental walker agrees with the batch map") {
  const auto sd = schreier_build(cyclic_quotient(3));
  HomologyWalker w(sd, 5);
  CHECK(w.trivial());
  const Word word{0, 2, 1, 3};
  for (Letter l : word) w.push(l);
  CHECK(w.trivial() == homology_map(word, sd, 5).is_trivial());
  for (std::size_t i = 0; i < word.size(); ++i) w.pop();
  CHECK(w.trivial());
  // x^3 lies in the kernel but is a nonzero homology class
  for (int i = 0; i < 3; ++i) w.push(0);
  CHECK(w.coset() == 0);
  CHECK_FALSE(w.trivial());
}

TEST_CASE("loop counts") {
  const auto free = FiberContext::make(29, 0, std::nullopt);
  const auto c0 = loop_count_words(free, 2);
  CHECK(c0.cumulative[2] == 37);
  const auto ctx = FiberContext::make(29, 1, std::nullopt);
  const auto c1 = loop_count_words(ctx, 4);
  CHECK(c1.cumulative[2] == 1);
  CHECK(c1.cumulative[4] == 1);
  CHECK(fiber_map({}, ctx).trivial());
  CHECK_FALSE(fiber_map({0, 2}, ctx).trivial());
}

TEST_CASE("injectivity radius with the homology layer") {
  const auto ctx = FiberContext::make(29, 1, 1);
  const auto c = loop_count_words(ctx, 4);
  CHECK(c.cumulative[4] == 1);
  const auto s = shortest_kernel_word(FiberContext::make(29, 1, std::nullopt), 4);
  CHECK_FALSE(s.has_value());
}
