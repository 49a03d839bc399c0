#include "boxspace/quaternion.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "boxspace/errors.hpp"
#include "boxspace/zmod.hpp"

namespace boxspace::quat {

i64 Quat::norm() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }

Quat operator*(const Quat& a, const Quat& b) {
  return {a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
          a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
          a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
          a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0};
}

QuatClass::QuatClass(const Quat& q, u64 p) : rep_(q), p_(p) {
  if (q == Quat{}) throw ParameterError("zero quaternion has no class");
  const i64 sp = static_cast<i64>(p);
  while (rep_.x0 % sp == 0 && rep_.x1 % sp == 0 && rep_.x2 % sp == 0 && rep_.x3 % sp == 0)
    rep_ = {rep_.x0 / sp, rep_.x1 / sp, rep_.x2 / sp, rep_.x3 / sp};
  const i64 lead = rep_.x0 != 0 ? rep_.x0 : rep_.x1 != 0 ? rep_.x1 : rep_.x2 != 0 ? rep_.x2 : rep_.x3;
  if (lead < 0) rep_ = {-rep_.x0, -rep_.x1, -rep_.x2, -rep_.x3};
}

unsigned QuatClass::norm_exponent() const {
  i64 n = rep_.norm();
  unsigned e = 0;
  while (n % static_cast<i64>(p_) == 0) {
    n /= static_cast<i64>(p_);
    ++e;
  }
  if (n != 1) throw StructureError("class norm is not a power of p");
  return e;
}

QuatClass operator*(const QuatClass& a, const QuatClass& b) {
  if (a.p_ != b.p_) throw ParameterError("classes for different p");
  return QuatClass(a.rep_ * b.rep_, a.p_);
}

bool operator<(const QuatClass& a, const QuatClass& b) {
  return std::tie(a.rep_.x0, a.rep_.x1, a.rep_.x2, a.rep_.x3) < std::tie(b.rep_.x0, b.rep_.x1, b.rep_.x2, b.rep_.x3);
}

GeneratorSet enumerate_Sp(u64 p) {
  if (!zmod::is_prime(p) || p % 4 != 1) throw ParameterError("p = " + std::to_string(p) + " is not a prime ≡ 1 mod 4");
  const i64 sp = static_cast<i64>(p);
  std::vector<Quat> positive;
  std::size_t total = 0;
  const i64 r = static_cast<i64>(std::sqrt(static_cast<double>(p))) + 1;
  for (i64 x0 = 1; x0 <= r; x0 += 2)
    for (i64 x1 = -r - (r & 1); x1 <= r; x1 += 2)
      for (i64 x2 = -r - (r & 1); x2 <= r; x2 += 2)
        for (i64 x3 = -r - (r & 1); x3 <= r; x3 += 2) {
          const Quat a{x0, x1, x2, x3};
          if (a.norm() != sp) continue;
          ++total;
          const i64 lead = x1 != 0 ? x1 : x2 != 0 ? x2 : x3;
          if (lead > 0) positive.push_back(a);
        }
  if (total != p + 1 || 2 * positive.size() != total)
    throw StructureError("S_p enumeration found " + std::to_string(total) + " solutions");
  std::sort(positive.begin(), positive.end(), [](const Quat& a, const Quat& b) {
    return std::make_tuple(a.x0, -a.x1, -a.x2, -a.x3) < std::make_tuple(b.x0, -b.x1, -b.x2, -b.x3);
  });
  GeneratorSet g;
  g.p = p;
  for (const auto& a : positive) {
    g.elements.push_back(a);
    g.elements.push_back(a.conj());
  }
  return g;
}

QuatClass word_to_class(const Word& w, const GeneratorSet& gens) {
  if (!is_reduced(w)) throw ParameterError("word is not reduced");
  Quat acc{1, 0, 0, 0};
  for (Letter l : w) {
    if (l >= gens.elements.size()) throw ParameterError("letter outside generator set");
    acc = acc * gens.elements[l];
  }
  return QuatClass(acc, gens.p);
}

namespace {

i64 isqrt(i64 x) {
  if (x < 0) return -1;
  i64 r = static_cast<i64>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

u64 count_three_squares(u64 x) {
  const i64 sx = static_cast<i64>(x);
  const i64 ra = isqrt(sx);
  u64 count = 0;
  for (i64 a = -ra; a <= ra; ++a) {
    const i64 rest = sx - a * a;
    const i64 rb = isqrt(rest);
    for (i64 b = -rb; b <= rb; ++b) {
      const i64 c2 = rest - b * b;
      const i64 c = isqrt(c2);
      if (c * c == c2) count += c == 0 ? 1 : 2;
    }
  }
  return count;
}

u64 loop_count_quat(unsigned n, unsigned m, u64 q, u64 p) {
  if (m % 2 != 0) throw ParameterError("loop_count_quat needs m even");
  const zmod::u128 big = [&] {
    zmod::u128 v = 1;
    for (unsigned i = 0; i < m; ++i) v *= p;
    return v;
  }();
  if (big > (zmod::u128{1} << 62)) throw ResourceError("p^m too large");
  const i64 target = static_cast<i64>(big);
  const i64 half = isqrt(target);  // p^(m/2)
  const i64 step2 = 2 * static_cast<i64>(zmod::checked_pow(q, n, 31));
  const i64 denom = step2 * step2;
  // x0^2 ≡ p^m (mod q^2n) forces x0 ≡ ±p^(m/2) by uniqueness of square roots.
  std::vector<i64> residues;
  i64 qn2 = 1;
  if (n > 0) {
    qn2 = static_cast<i64>(zmod::checked_pow(q, 2 * n, 62));
    const auto roots = zmod::sqrt_hensel(target % qn2, q, 2 * n, 2 * n);
    if (!roots) throw StructureError("p^m is not a square mod q^2n");
    residues = {static_cast<i64>(roots->plus), static_cast<i64>(roots->minus)};
    if (roots->plus == roots->minus) residues.pop_back();
  } else {
    residues = {0};
  }
  u64 count = 0;
  for (i64 r : residues) {
    // x0 ≡ r mod q^2n, x0 odd, |x0| <= p^(m/2)
    const i64 start = -half + static_cast<i64>(zmod::mod_reduce(r + half, static_cast<u64>(qn2)));
    for (i64 x0 = start; x0 <= half; x0 += qn2) {
      if ((x0 & 1) == 0) continue;
      const i64 rest = target - x0 * x0;
      if (rest % denom != 0) continue;
      count += count_three_squares(static_cast<u64>(rest / denom));
    }
  }
  return count;
}

std::vector<GrowthRow> loop_growth_report(unsigned n, u64 q, unsigned m_max) {
  std::vector<GrowthRow> rows;
  const double qd = static_cast<double>(q);
  for (unsigned m = 0; m <= m_max; m += 2) {
    GrowthRow row{};
    row.m = m;
    row.count = loop_count_quat(n, m, q);
    row.envelope = std::pow(5.0, 13.0 * m / 12.0) / (qd * qd * qd) + std::pow(5.0, 7.0 * m / 12.0) / qd;
    row.ratio = static_cast<double>(row.count) / row.envelope;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace boxspace::quat
