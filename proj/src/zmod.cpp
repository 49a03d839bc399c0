#include "boxspace/zmod.hpp"

#include <string>

#include "boxspace/errors.hpp"

namespace boxspace::zmod {

bool is_prime(u64 x) {
  if (x < 2) return false;
  if (x % 2 == 0) return x == 2;
  for (u64 d = 3; d * d <= x; d += 2)
    if (x % d == 0) return false;
  return true;
}

u64 checked_pow(u64 q, unsigned n, unsigned max_level) {
  if (n > max_level)
    throw ResourceError("level " + std::to_string(n) + " exceeds configured cap " + std::to_string(max_level));
  constexpr u64 limit = u64{1} << 62;
  u64 r = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (q != 0 && r > limit / q) throw ResourceError("modulus " + std::to_string(q) + "^" + std::to_string(n) + " overflows");
    r *= q;
  }
  return r;
}

u64 mod_reduce(i64 x, u64 m) {
  const i64 sm = static_cast<i64>(m);
  i64 r = x % sm;
  if (r < 0) r += sm;
  return static_cast<u64>(r);
}

u64 pow_mod(u64 base, u64 e, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

std::optional<u64> inv_mod(u64 x, u64 m) {
  i128 old_r = static_cast<i128>(x % m), r = static_cast<i128>(m);
  i128 old_s = 1, s = 0;
  while (r != 0) {
    const i128 quot = old_r / r;
    i128 t = old_r - quot * r;
    old_r = r;
    r = t;
    t = old_s - quot * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    if (m == 1) return 0;
    return std::nullopt;
  }
  i128 v = old_s % static_cast<i128>(m);
  if (v < 0) v += m;
  return static_cast<u64>(v);
}

Residue::Residue(i64 value, u64 modulus) : value_(0), modulus_(modulus) {
  if (modulus == 0) throw ParameterError("modulus must be positive");
  value_ = mod_reduce(value, modulus);
}

Residue Residue::from_unsigned(u64 value, u64 modulus) {
  if (modulus == 0) throw ParameterError("modulus must be positive");
  Residue r(0, modulus);
  r.value_ = value % modulus;
  return r;
}

bool Residue::is_unit() const { return inv_mod(value_, modulus_).has_value(); }

std::optional<Residue> Residue::inverse() const {
  auto inv = inv_mod(value_, modulus_);
  if (!inv) return std::nullopt;
  return from_unsigned(*inv, modulus_);
}

Residue Residue::pow(u64 e) const { return from_unsigned(pow_mod(value_, e, modulus_), modulus_); }

Residue Residue::reduce(u64 divisor_modulus) const {
  if (divisor_modulus == 0 || modulus_ % divisor_modulus != 0)
    throw ParameterError("reduction target must divide the modulus");
  return from_unsigned(value_ % divisor_modulus, divisor_modulus);
}

static void require_same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus()) throw ParameterError("residues with different moduli");
}

Residue operator+(Residue a, Residue b) {
  require_same_modulus(a, b);
  return Residue::from_unsigned(static_cast<u64>((static_cast<u128>(a.value_) + b.value_) % a.modulus_), a.modulus_);
}

Residue operator-(Residue a, Residue b) {
  require_same_modulus(a, b);
  return Residue::from_unsigned(
      static_cast<u64>((static_cast<u128>(a.value_) + a.modulus_ - b.value_) % a.modulus_), a.modulus_);
}

Residue operator*(Residue a, Residue b) {
  require_same_modulus(a, b);
  return Residue::from_unsigned(mul_mod(a.value_, b.value_, a.modulus_), a.modulus_);
}

Residue Residue::operator-() const { return from_unsigned((modulus_ - value_) % modulus_, modulus_); }

namespace {

void require_odd_prime(u64 q) {
  if (q % 2 == 0 || !is_prime(q)) throw ParameterError("q = " + std::to_string(q) + " is not an odd prime");
}

std::optional<u64> smallest_root_mod(u64 u_mod, u64 m) {
  for (u64 r = 0; r < m; ++r)
    if (mul_mod(r, r, m) == u_mod) return r;
  return std::nullopt;
}

}  // namespace

u64 hensel_lift_step(u64 b, i64 u, u64 q, unsigned level) {
  // b^2 = u + c q^(level-1); a = b - t c q^(level-1) with t = (2b)^-1 mod q.
  const u64 prev = checked_pow(q, level - 1, 62);
  const u64 mod = prev * q;
  const u64 b2 = mul_mod(b % mod, b % mod, mod);
  const u64 diff = (b2 + mod - mod_reduce(u, mod)) % mod;
  if (diff % prev != 0) throw ParameterError("hensel_lift_step: b is not a root at the previous level");
  const u64 c = diff / prev;  // in [0, q)
  const auto t = inv_mod(2 * (b % q) % q, q);
  if (!t) throw UnsupportedInput("hensel_lift_step: 2b is not invertible mod q");
  const u64 shift = mul_mod(mul_mod(*t, c, q), prev, mod);
  return (b % mod + mod - shift) % mod;
}

std::optional<RootPair> sqrt_hensel(i64 u, u64 q, unsigned n, unsigned max_level) {
  require_odd_prime(q);
  if (n == 0) throw ParameterError("sqrt_hensel: level must be >= 1");
  const u64 mod = checked_pow(q, n, max_level);
  if (mod_reduce(u, q) == 0) throw UnsupportedInput("sqrt_hensel: q divides u");
  auto r0 = smallest_root_mod(mod_reduce(u, q), q);
  if (!r0) return std::nullopt;
  u64 b = *r0;
  for (unsigned level = 2; level <= n; ++level) b = hensel_lift_step(b, u, q, level);
  const u64 other = (mod - b) % mod;
  const u64 plus = b <= mod / 2 ? b : other;
  return RootPair{plus, mod - plus, mod};
}

std::optional<u64> sqrt_hensel_even(i64 u, u64 q, unsigned n, unsigned max_level) {
  require_odd_prime(q);
  if (n == 0) throw ParameterError("sqrt_hensel_even: level must be >= 1");
  const u64 qn = checked_pow(q, n, max_level);
  if (mod_reduce(u, q) == 0) throw UnsupportedInput("sqrt_hensel_even: q divides u");
  auto r0 = smallest_root_mod(mod_reduce(u, 2 * q), 2 * q);
  if (!r0) return std::nullopt;
  u64 b = *r0;
  for (unsigned level = 2; level <= n; ++level) {
    // b^2 = u + 2 c q^(level-1); a = b - t c q^(level-1), t ≡ b^-1 mod q chosen even.
    const u64 prev = 2 * checked_pow(q, level - 1, 62);
    const u64 mod = prev * q;
    const u64 diff = (mul_mod(b, b, mod) + mod - mod_reduce(u, mod)) % mod;
    const u64 c = diff / prev;
    u64 t = *inv_mod(b % q, q);
    if (t % 2 == 1) t += q;
    const u64 shift = mul_mod(mul_mod(t, c, 2 * q), prev / 2, mod);
    b = (b + mod - shift) % mod;
  }
  const u64 mod = 2 * qn;
  const u64 other = (mod - b) % mod;
  return b <= qn ? b : other;
}

std::vector<u64> find_admissible_q(u64 lo, u64 hi, u64 p) {
  std::vector<u64> out;
  if (lo > hi) return out;
  for (u64 q = lo < 3 ? 3 : lo; q <= hi; ++q) {
    if (q % 2 == 0 || q == p || !is_prime(q)) continue;
    if (p % q == 0) continue;
    if (!sqrt_hensel(-1, q, 1)) continue;
    if (!sqrt_hensel_even(static_cast<i64>(p), q, 1)) continue;
    out.push_back(q);
  }
  return out;
}

std::vector<u64> epsilon_chain(u64 q, unsigned nmax, unsigned max_level) {
  require_odd_prime(q);
  if (nmax == 0) return {};
  checked_pow(q, nmax, max_level);
  auto r0 = smallest_root_mod(q - 1, q);
  if (!r0) throw NoResidueError("-1 is not a quadratic residue mod " + std::to_string(q));
  std::vector<u64> chain{*r0};
  for (unsigned level = 2; level <= nmax; ++level) chain.push_back(hensel_lift_step(chain.back(), -1, q, level));
  return chain;
}

LpsParams LpsParams::make(u64 p, u64 q, unsigned nmax, unsigned max_level) {
  if (!is_prime(p) || p % 4 != 1) throw ParameterError("p must be a prime ≡ 1 mod 4");
  require_odd_prime(q);
  if (q == p) throw ParameterError("q must differ from p");
  if (!sqrt_hensel_even(static_cast<i64>(p), q, 1)) throw ParameterError("p is not a quadratic residue mod 2q");
  LpsParams out;
  out.p = p;
  out.q = q;
  out.epsilon = epsilon_chain(q, nmax, max_level);
  return out;
}

u64 LpsParams::epsilon_at(unsigned n) const {
  if (n == 0 || n > epsilon.size()) throw ParameterError("epsilon chain not computed to level " + std::to_string(n));
  return epsilon[n - 1];
}

}  // namespace boxspace::zmod
