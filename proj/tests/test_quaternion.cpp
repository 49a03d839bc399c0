#include <doctest.h>

#include <set>

#include "boxspace/errors.hpp"
#include "boxspace/freegroup.hpp"
#include "boxspace/quaternion.hpp"

using namespace boxspace;
using namespace boxspace::quat;

TEST_CASE("generator set for p = 5") {
  const auto s = enumerate_Sp(5);
  REQUIRE(s.elements.size() == 6);
  CHECK(s.rank() == 3);
  const std::vector<Quat> expect{{1, 2, 0, 0}, {1, -2, 0, 0}, {1, 0, 2, 0}, {1, 0, -2, 0}, {1, 0, 0, 2}, {1, 0, 0, -2}};
  CHECK(s.elements == expect);
  for (std::size_t l = 0; l < 6; ++l) CHECK(s.elements[l].conj() == s.elements[l ^ 1]);
}

TEST_CASE("generator set sizes and rejection") {
  CHECK(enumerate_Sp(13).elements.size() == 14);
  CHECK(enumerate_Sp(17).elements.size() == 18);
  CHECK_THROWS_AS(enumerate_Sp(7), ParameterError);
}

TEST_CASE("quaternion norm is multiplicative") {
  const Quat a{1, 2, 3, 4}, b{-2, 1, 0, 5};
  CHECK((a * b).norm() == a.norm() * b.norm());
  CHECK((a * a.conj()) == Quat{a.norm(), 0, 0, 0});
}

TEST_CASE("word to class") {
  const auto s = enumerate_Sp(5);
  CHECK(word_to_class({}, s) == QuatClass::one(5));
  CHECK_THROWS_AS(word_to_class({0, 1}, s), ParameterError);
  std::set<QuatClass> seen;
  for_each_reduced_word(3, 2, [&](const Word& w) {
    const auto c = word_to_class(w, s);
    CHECK(c.norm_exponent() == 2);
    CHECK(c.rep().norm() == 25);
    seen.insert(c);
  });
  CHECK(seen.size() == 30);
}

TEST_CASE("distinct reduced words give distinct classes up to length 4") {
  const auto s = enumerate_Sp(5);
  std::set<QuatClass> seen;
  std::size_t words = 0;
  for_each_reduced_word(3, 4, [&](const Word& w) {
    seen.insert(word_to_class(w, s));
    ++words;
  });
  CHECK(words == reduced_word_count(3, 4));
  CHECK(seen.size() == words);
}

TEST_CASE("class inverse") {
  const auto s = enumerate_Sp(5);
  const auto c = word_to_class({0, 2, 5}, s);
  CHECK(c * c.inverse() == QuatClass::one(5));
}

TEST_CASE("three squares") {
  CHECK(count_three_squares(0) == 1);
  CHECK(count_three_squares(1) == 6);
  CHECK(count_three_squares(2) == 12);
  CHECK(count_three_squares(3) == 8);
  CHECK(count_three_squares(7) == 0);
  u64 brute = 0;
  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b)
      for (int c = -5; c <= 5; ++c) brute += a * a + b * b + c * c == 25;
  CHECK(count_three_squares(25) == brute);
  CHECK(brute == 30);
}

TEST_CASE("quaternion loop counts") {
  CHECK(loop_count_quat(0, 0, 29) == 2);
  CHECK(loop_count_quat(1, 0, 29) == 2);
  CHECK_THROWS_AS(loop_count_quat(1, 3, 29), ParameterError);
  // length 2 words of parity 0 in the free group: 1 + 30, two signs per class
  CHECK(loop_count_quat(0, 2, 29) == 62);
}

TEST_CASE("quaternion count matches the word-ball oracle on PSL(2, 29)") {
  const auto ctx = fg::FiberContext::make(29, 1, std::nullopt);
  const auto counts = fg::loop_count_words(ctx, 6);
  for (unsigned m = 0; m <= 6; m += 2) CHECK(loop_count_quat(1, m, 29) == 2 * counts.parity[m]);
}

TEST_CASE("growth report") {
  const auto rows = loop_growth_report(1, 29, 6);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].m == 0);
  for (const auto& r : rows) CHECK(r.envelope > 0);
}
