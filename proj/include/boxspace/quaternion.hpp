#pragma once

#include <cstdint>
#include <vector>

#include "boxspace/word.hpp"

namespace boxspace::quat {

using i64 = std::int64_t;
using u64 = std::uint64_t;

struct Quat {
  i64 x0 = 0, x1 = 0, x2 = 0, x3 = 0;

  Quat conj() const { return {x0, -x1, -x2, -x3}; }
  i64 norm() const;
  friend Quat operator*(const Quat& a, const Quat& b);
  friend bool operator==(const Quat&, const Quat&) = default;
};

// A quaternion up to multiplication by ±p^e: divided by p as far as possible,
// first nonzero coefficient positive.
class QuatClass {
 public:
  QuatClass(const Quat& q, u64 p);
  static QuatClass one(u64 p) { return QuatClass(Quat{1, 0, 0, 0}, p); }

  const Quat& rep() const { return rep_; }
  u64 p() const { return p_; }
  // e with norm(rep) = p^e; throws StructureError when the norm is not a power of p.
  unsigned norm_exponent() const;
  QuatClass inverse() const { return QuatClass(rep_.conj(), p_); }

  friend QuatClass operator*(const QuatClass& a, const QuatClass& b);
  friend bool operator==(const QuatClass& a, const QuatClass& b) { return a.p_ == b.p_ && a.rep_ == b.rep_; }
  friend bool operator<(const QuatClass& a, const QuatClass& b);

 private:
  Quat rep_;
  u64 p_;
};

// S_p ordered as g1, g1^-1, g2, g2^-1, ...; Letter l of a Word indexes elements[l].
struct GeneratorSet {
  u64 p = 5;
  std::vector<Quat> elements;

  unsigned rank() const { return static_cast<unsigned>(elements.size() / 2); }
};

GeneratorSet enumerate_Sp(u64 p);

// Class of the product; rejects words that are not reduced.
QuatClass word_to_class(const Word& w, const GeneratorSet& gens);

// Ordered triples (a, b, c) of integers with a^2 + b^2 + c^2 = x.
u64 count_three_squares(u64 x);

// Quaternions x0 + 2q^n (b i + c j + d k), x0 odd, of norm p^m (m even).
u64 loop_count_quat(unsigned n, unsigned m, u64 q, u64 p = 5);

struct GrowthRow {
  unsigned m;
  u64 count;
  double envelope;  // 5^(13m/12)/q^3 + 5^(7m/12)/q
  double ratio;
};

std::vector<GrowthRow> loop_growth_report(unsigned n, u64 q, unsigned m_max);

}  // namespace boxspace::quat
