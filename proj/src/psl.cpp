#include "boxspace/psl.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "boxspace/errors.hpp"

namespace boxspace::psl {

using zmod::mod_reduce;
using zmod::mul_mod;

PglMat PglMat::canonical(u64 a, u64 b, u64 c, u64 d, u64 q, unsigned level, u64 mod) {
  Key e{a % mod, b % mod, c % mod, d % mod};
  for (u64 x : e) {
    if (x % q == 0) continue;
    const u64 s = *zmod::inv_mod(x, mod);
    for (auto& y : e) y = mul_mod(y, s, mod);
    return PglMat(e, q, level, mod);
  }
  throw ParameterError("matrix has no unit entry");
}

PglMat PglMat::make(i64 a, i64 b, i64 c, i64 d, u64 q, unsigned level) {
  const u64 mod = zmod::checked_pow(q, level, 62);
  const u64 ra = mod_reduce(a, mod), rb = mod_reduce(b, mod), rc = mod_reduce(c, mod), rd = mod_reduce(d, mod);
  const u64 det = (mul_mod(ra, rd, mod) + mod - mul_mod(rb, rc, mod)) % mod;
  if (det % q == 0) throw ParameterError("determinant is not a unit");
  return canonical(ra, rb, rc, rd, q, level, mod);
}

PglMat PglMat::identity(u64 q, unsigned level) { return make(1, 0, 0, 1, q, level); }

u64 PglMat::det() const {
  return (mul_mod(e_[0], e_[3], mod_) + mod_ - mul_mod(e_[1], e_[2], mod_)) % mod_;
}

bool PglMat::in_psl() const { return zmod::pow_mod(det() % q_, (q_ - 1) / 2, q_) == 1; }

bool PglMat::is_identity() const { return e_[0] == 1 && e_[1] == 0 && e_[2] == 0 && e_[3] == 1; }

PglMat PglMat::inverse() const {
  return canonical(e_[3], (mod_ - e_[1]) % mod_, (mod_ - e_[2]) % mod_, e_[0], q_, level_, mod_);
}

PglMat PglMat::pow(u64 e) const {
  PglMat result = identity(q_, level_), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

PglMat operator*(const PglMat& x, const PglMat& y) {
  if (x.mod_ != y.mod_) throw ParameterError("matrices at different levels");
  const u64 m = x.mod_;
  const auto& p = x.e_;
  const auto& r = y.e_;
  return PglMat::canonical((mul_mod(p[0], r[0], m) + mul_mod(p[1], r[2], m)) % m,
                           (mul_mod(p[0], r[1], m) + mul_mod(p[1], r[3], m)) % m,
                           (mul_mod(p[2], r[0], m) + mul_mod(p[3], r[2], m)) % m,
                           (mul_mod(p[2], r[1], m) + mul_mod(p[3], r[3], m)) % m, x.q_, x.level_, m);
}

std::size_t KeyHash::operator()(const Key& k) const noexcept {
  u64 h = 0x9e3779b97f4a7c15ULL;
  for (u64 x : k) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 31));
}

PglMat commutator(const PglMat& x, const PglMat& y) { return x * y * x.inverse() * y.inverse(); }

PglMat reduce(const PglMat& g, unsigned k) {
  if (k == 0) throw ParameterError("reduce: target level must be >= 1");
  if (k > g.level()) throw ParameterError("reduce: target level above source level");
  return PglMat::make(static_cast<i64>(g.a()), static_cast<i64>(g.b()), static_cast<i64>(g.c()),
                      static_cast<i64>(g.d()), g.q(), k);
}

PglMat lps_embed(const quat::Quat& x, u64 q, unsigned n, u64 eps) {
  const u64 mod = zmod::checked_pow(q, n, 62);
  if (mul_mod(eps % mod, eps % mod, mod) != mod - 1)
    throw ParameterError("eps^2 is not -1 mod q^" + std::to_string(n));
  const i64 e = static_cast<i64>(eps % mod);
  auto r = [&](i64 v) { return mod_reduce(v, mod); };
  const u64 ue = static_cast<u64>(e);
  const u64 x1e = mul_mod(r(x.x1), ue, mod), x3e = mul_mod(r(x.x3), ue, mod);
  return PglMat::make(static_cast<i64>((r(x.x0) + x1e) % mod), static_cast<i64>((r(x.x2) + x3e) % mod),
                      static_cast<i64>((r(-x.x2) + x3e) % mod), static_cast<i64>((r(x.x0) + mod - x1e) % mod), q, n);
}

std::vector<PglMat> lps_generators(const quat::GeneratorSet& gens, u64 q, unsigned n, u64 eps) {
  std::vector<PglMat> out;
  for (const auto& g : gens.elements) out.push_back(lps_embed(g, q, n, eps));
  return out;
}

PglMat embed_word(const Word& w, const std::vector<PglMat>& letter_images) {
  if (letter_images.empty()) throw ParameterError("no letter images");
  PglMat acc = PglMat::identity(letter_images[0].q(), letter_images[0].level());
  for (Letter l : w) acc = acc * letter_images.at(l);
  return acc;
}

u64 psl_order(u64 q, unsigned n) {
  if (n == 0) return 1;
  return zmod::checked_pow(q, 3 * n - 2, 62) * (q * q - 1) / 2;
}

std::vector<PglMat> psl_enumerate(u64 q, unsigned n) {
  const u64 mod = zmod::checked_pow(q, n, 62);
  if (mod > 40) throw ResourceError("psl_enumerate is only meant for q^n <= 40");
  std::unordered_set<Key, KeyHash> seen;
  std::vector<PglMat> out;
  const u64 half = (q - 1) / 2;
  for (u64 a = 0; a < mod; ++a)
    for (u64 b = 0; b < mod; ++b)
      for (u64 c = 0; c < mod; ++c)
        for (u64 d = 0; d < mod; ++d) {
          const u64 det = (a * d % mod + mod - b * c % mod) % mod;
          if (det % q == 0 || zmod::pow_mod(det % q, half, q) != 1) continue;
          auto g = PglMat::make(static_cast<i64>(a), static_cast<i64>(b), static_cast<i64>(c), static_cast<i64>(d), q, n);
          if (seen.insert(g.key()).second) out.push_back(g);
        }
  std::sort(out.begin(), out.end());
  return out;
}

u64 psl_bruteforce_count(u64 q, unsigned n) { return psl_enumerate(q, n).size(); }

bool Subgroup::contains(const PglMat& g) const { return std::binary_search(sorted_keys.begin(), sorted_keys.end(), g.key()); }

Subgroup subgroup_closure(const std::vector<PglMat>& gens, u64 cap) {
  if (gens.empty()) throw ParameterError("subgroup_closure needs at least one generator");
  Subgroup s;
  std::unordered_set<Key, KeyHash> seen;
  const PglMat id = PglMat::identity(gens[0].q(), gens[0].level());
  s.elements.push_back(id);
  seen.insert(id.key());
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    for (const auto& g : gens) {
      PglMat h = s.elements[i] * g;
      if (seen.insert(h.key()).second) {
        if (s.elements.size() >= cap) throw ResourceError("subgroup closure exceeds element cap " + std::to_string(cap));
        s.elements.push_back(h);
      }
    }
  }
  s.sorted_keys.reserve(s.elements.size());
  for (const auto& g : s.elements) s.sorted_keys.push_back(g.key());
  std::sort(s.sorted_keys.begin(), s.sorted_keys.end());
  return s;
}

QuotientClosure quotient_from_generators(const std::vector<PglMat>& letter_images, u64 cap) {
  if (letter_images.empty() || letter_images.size() % 2 != 0) throw ParameterError("letters must come in inverse pairs");
  for (std::size_t i = 0; i < letter_images.size(); i += 2)
    if (!(letter_images[i] * letter_images[i + 1]).is_identity())
      throw ParameterError("letter " + std::to_string(i + 1) + " is not the inverse of letter " + std::to_string(i));
  QuotientClosure out;
  std::unordered_map<Key, std::uint32_t, KeyHash> index;
  out.elements.push_back(PglMat::identity(letter_images[0].q(), letter_images[0].level()));
  index.emplace(out.elements[0].key(), 0);
  const std::size_t L = letter_images.size();
  std::vector<std::vector<std::uint32_t>> action(L);
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    for (std::size_t l = 0; l < L; ++l) {
      PglMat h = out.elements[i] * letter_images[l];
      auto [it, fresh] = index.emplace(h.key(), static_cast<std::uint32_t>(out.elements.size()));
      if (fresh) {
        if (out.elements.size() >= cap) throw ResourceError("quotient closure exceeds element cap " + std::to_string(cap));
        out.elements.push_back(h);
      }
      action[l].push_back(it->second);
    }
  }
  out.quotient.size = static_cast<std::uint32_t>(out.elements.size());
  out.quotient.action = std::move(action);
  return out;
}

std::array<PglMat, 3> kernel_generators(u64 q, unsigned n, unsigned k) {
  const i64 s = static_cast<i64>(zmod::checked_pow(q, k, 62));
  return {PglMat::make(1 + s, 0, 0, 1 - s, q, n), PglMat::make(1, s, 0, 1, q, n), PglMat::make(1, 0, s, 1, q, n)};
}

std::array<PglMat, 3> mgen_generators(u64 q, unsigned n) {
  if (n < 2) throw ParameterError("mgen_generators needs n >= 2");
  return kernel_generators(q, n, n - 1);
}

namespace {

u64 element_order(const PglMat& g, u64 bound) {
  PglMat x = g;
  for (u64 e = 1; e <= bound; ++e) {
    if (x.is_identity()) return e;
    x = x * g;
  }
  throw StructureError("element order exceeds bound");
}

}  // namespace

CongruenceKernel kernel_enumerate(u64 q, unsigned n, unsigned k, u64 cap, bool analyse) {
  if (k == 0 || k > n) throw ParameterError("kernel_enumerate needs 1 <= k <= n");
  const unsigned d = n - k;
  const u64 side = zmod::checked_pow(q, d, 62);
  if (3 * d > 62 || zmod::checked_pow(q, 3 * d, 62) > cap)
    throw ResourceError("kernel of size q^" + std::to_string(3 * d) + " exceeds element cap");
  const i64 s = static_cast<i64>(zmod::checked_pow(q, k, 62));
  CongruenceKernel K;
  K.q = q;
  K.n = n;
  K.k = k;
  for (u64 beta = 0; beta < side; ++beta)
    for (u64 gamma = 0; gamma < side; ++gamma)
      for (u64 delta = 0; delta < side; ++delta)
        K.elements.push_back(PglMat::make(1, static_cast<i64>(beta) * s, static_cast<i64>(gamma) * s,
                                          1 + static_cast<i64>(delta) * s, q, n));
  for (const auto& g : K.elements) K.sorted_keys.push_back(g.key());
  std::sort(K.sorted_keys.begin(), K.sorted_keys.end());
  if (std::adjacent_find(K.sorted_keys.begin(), K.sorted_keys.end()) != K.sorted_keys.end())
    throw StructureError("kernel enumeration produced duplicate classes");
  if (!analyse) return K;

  K.analysed = true;
  K.abelian = true;
  const std::size_t N = K.elements.size();
  if (N <= 3000) {
    for (std::size_t i = 0; i < N && K.abelian; ++i)
      for (std::size_t j = i + 1; j < N; ++j)
        if (!(K.elements[i] * K.elements[j] == K.elements[j] * K.elements[i])) {
          K.abelian = false;
          break;
        }
  } else {
    auto gens = kernel_generators(q, n, k);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (!(gens[i] * gens[j] == gens[j] * gens[i])) K.abelian = false;
  }
  K.exponent = 1;
  for (const auto& g : K.elements) K.exponent = std::max(K.exponent, element_order(g, side * side * side));

  const auto gens = kernel_generators(q, n, k);
  std::vector<Key> prods;
  prods.reserve(N);
  PglMat di = PglMat::identity(q, n);
  for (u64 i = 0; i < side; ++i, di = di * gens[0]) {
    PglMat dj = di;
    for (u64 j = 0; j < side; ++j, dj = dj * gens[1]) {
      PglMat dl = dj;
      for (u64 l = 0; l < side; ++l, dl = dl * gens[2]) prods.push_back(dl.key());
    }
  }
  std::sort(prods.begin(), prods.end());
  K.product_of_cyclics = prods == K.sorted_keys;
  return K;
}

std::vector<PglMat> kernel_by_filter(const std::vector<PglMat>& group, unsigned k) {
  std::vector<PglMat> out;
  for (const auto& g : group)
    if (reduce(g, k).is_identity()) out.push_back(g);
  return out;
}

CommutatorCheck commutator_identity(u64 q, unsigned n, unsigned k) {
  if (n < 2 || k + 2 > n) throw ParameterError("commutator_identity needs k <= n-2");
  const i64 x = static_cast<i64>(zmod::checked_pow(q, k + 1, 62));
  const i64 y = static_cast<i64>(zmod::checked_pow(q, n - k - 2, 62));
  const i64 t = static_cast<i64>(zmod::checked_pow(q, n - 1, 62));
  const PglMat U = PglMat::make(1, x, 0, 1, q, n);
  const PglMat L = PglMat::make(1, 0, y, 1, q, n);
  const PglMat D = PglMat::make(1 + t, 0, 0, 1 - t, q, n);
  const PglMat c = commutator(U, L);
  return {k, c == D, c, D};
}

GammaReport gamma_image_check(u64 q, unsigned n, unsigned k, u64 cap) {
  if (k == 0 || k >= n) throw ParameterError("gamma_image_check needs 0 < k < n");
  const auto K = kernel_enumerate(q, n, k, cap, false);
  const std::size_t N = K.elements.size();
  if (static_cast<double>(N) * static_cast<double>(N) > 2e8) throw ResourceError("too many commutator pairs");
  std::unordered_set<Key, KeyHash> seen;
  std::vector<PglMat> gens;
  auto add = [&](const PglMat& g) {
    if (!g.is_identity() && seen.insert(g.key()).second) gens.push_back(g);
  };
  std::vector<PglMat> inverses;
  inverses.reserve(N);
  for (const auto& x : K.elements) {
    add(x.pow(q));
    inverses.push_back(x.inverse());
  }
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) add(K.elements[i] * K.elements[j] * inverses[i] * inverses[j]);
  GammaReport r;
  r.generator_count = gens.size();
  const auto expected = kernel_enumerate(q, n, k + 1, cap, false);
  r.expected = expected.elements.size();
  if (gens.empty()) gens.push_back(PglMat::identity(q, n));
  const auto H = subgroup_closure(gens, cap);
  r.generated = H.size();
  r.equal = H.sorted_keys == expected.sorted_keys;
  return r;
}

}  // namespace boxspace::psl
