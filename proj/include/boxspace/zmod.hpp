#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace boxspace::zmod {

using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

/// Largest exponent n accepted for q^n unless a caller raises it.
inline constexpr unsigned kDefaultMaxLevel = 8;

bool is_prime(u64 x);

/// q^n with overflow check; throws ResourceError if q^n exceeds 2^62 or n > max_level.
u64 checked_pow(u64 q, unsigned n, unsigned max_level = kDefaultMaxLevel);

u64 mod_reduce(i64 x, u64 m);
inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
u64 pow_mod(u64 base, u64 e, u64 m);
/// Inverse of a unit mod m, std::nullopt when gcd(x, m) != 1.
std::optional<u64> inv_mod(u64 x, u64 m);

/// An element of Z/m.
class Residue {
 public:
  Residue(i64 value, u64 modulus);
  static Residue from_unsigned(u64 value, u64 modulus);

  u64 value() const { return value_; }
  u64 modulus() const { return modulus_; }

  bool is_unit() const;
  std::optional<Residue> inverse() const;
  Residue pow(u64 e) const;
  /// Reduction to a modulus dividing this one.
  Residue reduce(u64 divisor_modulus) const;

  friend Residue operator+(Residue a, Residue b);
  friend Residue operator-(Residue a, Residue b);
  friend Residue operator*(Residue a, Residue b);
  Residue operator-() const;
  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  u64 value_;
  u64 modulus_;
};

/// The two square roots {+r, -r} of u modulo q^n; `plus` is the root in [1, q^n/2].
struct RootPair {
  u64 plus;
  u64 minus;
  u64 modulus;
};

/// Square roots of u modulo q^n by level-by-level Hensel lifting.
/// std::nullopt iff u is a non-residue mod q. Throws ParameterError when q is not
/// an odd prime or n == 0, UnsupportedInput when q | u.
std::optional<RootPair> sqrt_hensel(i64 u, u64 q, unsigned n, unsigned max_level = kDefaultMaxLevel);

/// One Hensel step: given b^2 ≡ u mod q^(level-1) with q ∤ b, the unique a ≡ b mod q^(level-1)
/// with a^2 ≡ u mod q^level.
u64 hensel_lift_step(u64 b, i64 u, u64 q, unsigned level);

/// A square root of u modulo 2q^n (the one in [1, q^n]), std::nullopt when u is not a
/// residue mod 2q.
std::optional<u64> sqrt_hensel_even(i64 u, u64 q, unsigned n, unsigned max_level = kDefaultMaxLevel);

/// Odd primes q in [lo, hi], q != p, with -1 a residue mod q and p a residue mod 2q.
std::vector<u64> find_admissible_q(u64 lo, u64 hi, u64 p = 5);

/// eps_1, ..., eps_nmax with eps_n^2 ≡ -1 mod q^n and eps_n ≡ eps_(n-1) mod q^(n-1);
/// eps_1 is the smallest root mod q. Throws NoResidueError if -1 is a non-residue mod q.
std::vector<u64> epsilon_chain(u64 q, unsigned nmax, unsigned max_level = kDefaultMaxLevel);

/// Validated parameter set for the LPS construction.
struct LpsParams {
  u64 p = 5;
  u64 q = 29;
  std::vector<u64> epsilon;  // epsilon[n-1] is eps_n

  static LpsParams make(u64 p, u64 q, unsigned nmax, unsigned max_level = kDefaultMaxLevel);
  u64 epsilon_at(unsigned n) const;
};

}  // namespace boxspace::zmod
