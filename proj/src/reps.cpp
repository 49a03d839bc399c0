#include "boxspace/reps.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

#include "boxspace/errors.hpp"
#include "boxspace/zmod.hpp"

namespace boxspace::reps {

using zmod::mul_mod;

BorelGroup BorelGroup::make(u64 q, unsigned k, unsigned n, u64 cap) {
  if (k == 0 || 2 * k > n) throw ParameterError("borel_group needs 0 < 2k <= n");
  BorelGroup G;
  G.q = q;
  G.k = k;
  G.n = n;
  G.mod = zmod::checked_pow(q, n, 62);
  G.side = zmod::checked_pow(q, n - k, 62);
  if (G.side > (u64{1} << 31) / G.side || G.side * G.side > cap)
    throw ResourceError("B_{k,n} of order q^" + std::to_string(2 * (n - k)) + " exceeds cap");
  G.order = static_cast<u32>(G.side * G.side);
  const u64 qk = zmod::checked_pow(q, k, 62);
  const u64 gen = (1 + qk) % G.mod;
  std::unordered_map<u64, u64> log;
  u64 x = 1;
  std::vector<u64> powers(G.side);
  for (u64 beta = 0; beta < G.side; ++beta) {
    powers[beta] = x;
    if (!log.emplace(x, beta).second) throw StructureError("1+q^k has order below q^(n-k)");
    x = mul_mod(x, gen, G.mod);
  }
  if (x != 1) throw StructureError("1+q^k does not have order q^(n-k)");
  G.a.resize(G.order);
  G.b.resize(G.order);
  for (u64 beta = 0; beta < G.side; ++beta)
    for (u64 t = 0; t < G.side; ++t) {
      const u32 i = G.index(beta, t);
      G.a[i] = powers[beta];
      G.b[i] = mul_mod(qk, t, G.mod);
    }
  std::vector<u64> ainv(G.order);
  for (u32 i = 0; i < G.order; ++i) ainv[i] = *zmod::inv_mod(G.a[i], G.mod);
  G.mult.resize(static_cast<std::size_t>(G.order) * G.order);
  for (u32 i = 0; i < G.order; ++i)
    for (u32 j = 0; j < G.order; ++j) {
      // (a, b)(a', b') = (a a', a b' + b a'^-1)
      const u64 na = mul_mod(G.a[i], G.a[j], G.mod);
      const u64 nb = (mul_mod(G.a[i], G.b[j], G.mod) + mul_mod(G.b[i], ainv[j], G.mod)) % G.mod;
      G.mult[static_cast<std::size_t>(i) * G.order + j] = G.index(log.at(na), nb / qk);
    }
  return G;
}

u32 BorelGroup::inverse(u32 x) const {
  for (u32 y = 0; y < order; ++y)
    if (mul(x, y) == 0) return y;
  throw StructureError("element without inverse");
}

bool BorelGroup::abelian() const {
  for (u32 x = 0; x < order; ++x)
    for (u32 y = x + 1; y < order; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

u32 BorelGroup::reduce_index(u32 x, const BorelGroup& lower) const {
  return lower.index(beta(x) % lower.side, t(x) % lower.side);
}

std::string kind_name(IrrepKind k) {
  switch (k) {
    case IrrepKind::pi_rho:
      return "pi_rho";
    case IrrepKind::lifted_rho:
      return "lifted_rho";
    case IrrepKind::base_character:
      return "base_character";
  }
  return "unknown";
}

std::complex<double> Irrep::character(u32 g) const {
  std::complex<double> s = 0;
  const std::size_t off = static_cast<std::size_t>(g) * dim;
  for (u32 i = 0; i < dim; ++i)
    if (perm[off + i] == i) s += std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(phase[off + i]) / static_cast<double>(mod));
  return s;
}

bool Irrep::is_identity_at(u32 g) const {
  const std::size_t off = static_cast<std::size_t>(g) * dim;
  for (u32 i = 0; i < dim; ++i)
    if (perm[off + i] != i || phase[off + i] != 0) return false;
  return true;
}

Irrep build_rho(const BorelGroup& G, u64 j) {
  Irrep r;
  r.kind = IrrepKind::base_character;
  r.j = 0;
  r.jp = static_cast<int>(j);
  r.lineage = "rho_" + std::to_string(j);
  r.dim = 1;
  r.order = G.order;
  r.mod = G.mod;
  r.perm.assign(G.order, 0);
  r.phase.resize(G.order);
  const u64 qk = G.mod / G.side;
  // omega^(beta j), omega = e(1/q^(n-k))
  for (u32 g = 0; g < G.order; ++g) r.phase[g] = mul_mod(mul_mod(G.beta(g), j, G.mod), qk, G.mod);
  return r;
}

namespace {

Irrep pi_common(const BorelGroup& G, u64 j, bool literal) {
  const u64 qk = G.mod / G.side;
  if (j >= qk) throw ParameterError("pi_j needs 0 <= j < q^k");
  if (G.n > 2 * G.k && j % G.q == 0) throw ParameterError("pi_j needs j not divisible by q");
  Irrep r;
  r.kind = IrrepKind::pi_rho;
  r.j = static_cast<int>(j);
  r.lineage = "pi_" + std::to_string(j);
  r.dim = static_cast<u32>(G.side / qk);
  r.order = G.order;
  r.mod = G.mod;
  r.perm.resize(static_cast<std::size_t>(G.order) * r.dim);
  r.phase.resize(r.perm.size());
  for (u32 g = 0; g < G.order; ++g) {
    const u64 ainv = *zmod::inv_mod(G.a[g], G.mod);
    const u64 amul = literal ? G.a[g] : ainv;
    const u64 sq = mul_mod(amul, amul, G.side);
    for (u32 s = 0; s < r.dim; ++s) {
      const u64 x = j + qk * s;
      const u64 target = mul_mod(sq, x, G.side);
      const std::size_t off = static_cast<std::size_t>(g) * r.dim + s;
      r.perm[off] = static_cast<u32>((target - j) / qk);
      r.phase[off] = mul_mod(mul_mod(amul, G.b[g], G.mod), x, G.mod);
    }
  }
  return r;
}

}  // namespace

Irrep build_pi(const BorelGroup& G, u64 j) { return pi_common(G, j, false); }
Irrep build_pi_literal(const BorelGroup& G, u64 j) { return pi_common(G, j, true); }

Irrep tensor(const Irrep& pi, const Irrep& rho) {
  if (rho.dim != 1 || rho.order != pi.order || rho.mod != pi.mod) throw ParameterError("tensor needs a matching character");
  Irrep r = pi;
  r.jp = rho.jp;
  r.lineage = pi.lineage + "*" + rho.lineage;
  for (u32 g = 0; g < pi.order; ++g)
    for (u32 i = 0; i < pi.dim; ++i) {
      auto& ph = r.phase[static_cast<std::size_t>(g) * pi.dim + i];
      ph = (ph + rho.phase[g]) % pi.mod;
    }
  return r;
}

Irrep lift(const Irrep& lower, const BorelGroup& lower_group, const BorelGroup& G) {
  if (lower_group.n + 1 != G.n || lower_group.k != G.k || lower_group.q != G.q) throw ParameterError("lift needs B_{k,n-1}");
  Irrep r;
  r.kind = IrrepKind::lifted_rho;
  r.j = lower.j;
  r.jp = lower.jp;
  r.lineage = "lift(" + lower.lineage + ")";
  r.dim = lower.dim;
  r.order = G.order;
  r.mod = G.mod;
  r.perm.resize(static_cast<std::size_t>(G.order) * r.dim);
  r.phase.resize(r.perm.size());
  for (u32 g = 0; g < G.order; ++g) {
    const u32 h = G.reduce_index(g, lower_group);
    for (u32 i = 0; i < r.dim; ++i) {
      const std::size_t src = static_cast<std::size_t>(h) * r.dim + i, dst = static_cast<std::size_t>(g) * r.dim + i;
      r.perm[dst] = lower.perm[src];
      r.phase[dst] = lower.phase[src] * G.q % G.mod;
    }
  }
  return r;
}

bool homomorphism_on(const Irrep& pi, const BorelGroup& G, u32 g, u32 h, bool reversed) {
  const u32 gh = reversed ? G.mul(h, g) : G.mul(g, h);
  const std::size_t og = static_cast<std::size_t>(g) * pi.dim, oh = static_cast<std::size_t>(h) * pi.dim,
                    ogh = static_cast<std::size_t>(gh) * pi.dim;
  for (u32 i = 0; i < pi.dim; ++i) {
    // pi(g) pi(h) xi_i = e(phase_h[i] + phase_g[perm_h[i]]) xi_(perm_g[perm_h[i]])
    const u32 mid = pi.perm[oh + i];
    const u32 dest = pi.perm[og + mid];
    const u64 ph = (pi.phase[oh + i] + pi.phase[og + mid]) % pi.mod;
    if (pi.perm[ogh + i] != dest || pi.phase[ogh + i] != ph) return false;
  }
  return true;
}

LevelInfo dimension_by_level(const BorelGroup& G, const Irrep& pi) {
  LevelInfo info;
  const unsigned top = G.n - G.k;
  bool seen_nonidentity = false;
  for (unsigned l = 0; l <= top; ++l) {
    // u(q^(n-l)) = (a = 1, b = q^(n-l)), i.e. t = q^(n-l-k)
    const u64 t = zmod::checked_pow(G.q, top - l, 62) % G.side;
    const bool id = pi.is_identity_at(G.index(0, t));
    if (id && seen_nonidentity) info.monotone = false;
    if (!id) seen_nonidentity = true;
    if (id && !seen_nonidentity) info.l = l;
  }
  const unsigned free_exp = G.n - 2 * G.k;
  info.saturated = info.l >= free_exp;
  info.predicted_dim = info.saturated ? 1 : zmod::checked_pow(G.q, free_exp - info.l, 62);
  info.matches = info.monotone && info.predicted_dim == pi.dim;
  return info;
}

namespace {

std::vector<Irrep> inventory_rec(const BorelGroup& G) {
  std::vector<Irrep> out;
  const u64 qk = G.mod / G.side;
  if (G.n == 2 * G.k) {
    for (u64 j = 0; j < qk; ++j)
      for (u64 jp = 0; jp < qk; ++jp) {
        Irrep r = tensor(build_pi(G, j), build_rho(G, jp));
        r.kind = IrrepKind::base_character;
        out.push_back(std::move(r));
      }
    return out;
  }
  for (u64 j = 0; j < qk; ++j) {
    if (j % G.q == 0) continue;
    const Irrep pi = build_pi(G, j);
    for (u64 jp = 0; jp < qk; ++jp) out.push_back(tensor(pi, build_rho(G, jp)));
  }
  const BorelGroup lower = BorelGroup::make(G.q, G.k, G.n - 1);
  for (const auto& r : inventory_rec(lower)) {
    const Irrep up = lift(r, lower, G);
    for (u64 j = 0; j < G.q; ++j) {
      Irrep t = tensor(up, build_rho(G, j));
      t.kind = IrrepKind::lifted_rho;
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

CharacterTable irrep_inventory(const BorelGroup& G, std::uint64_t seed) {
  CharacterTable T;
  T.irreps = inventory_rec(G);
  for (const auto& r : T.irreps) {
    T.sum_dim_sq += static_cast<u64>(r.dim) * r.dim;
    ++T.dimension_counts[r.dim];
  }
  T.complete = T.sum_dim_sq == G.order;
  if (!T.complete)
    throw StructureError("irrep dimensions give " + std::to_string(T.sum_dim_sq) + " instead of |B| = " +
                         std::to_string(G.order));

  const std::size_t m = T.irreps.size();
  Eigen::MatrixXcd chi(static_cast<Eigen::Index>(m), G.order);
  for (std::size_t i = 0; i < m; ++i)
    for (u32 g = 0; g < G.order; ++g) chi(static_cast<Eigen::Index>(i), g) = T.irreps[i].character(g);
  const Eigen::MatrixXcd gram = chi * chi.adjoint() / static_cast<double>(G.order);
  T.orthonormality_defect = (gram - Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m)))
                                .cwiseAbs()
                                .maxCoeff();

  T.levels_ok = true;
  for (const auto& r : T.irreps) T.levels_ok = T.levels_ok && dimension_by_level(G, r).matches;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u32> pick(0, G.order - 1);
  T.homomorphisms_ok = true;
  for (const auto& r : T.irreps) {
    const u32 gens[2] = {G.index(1 % G.side, 0), G.index(0, 1 % G.side)};
    for (u32 g : gens)
      for (u32 h : gens) T.homomorphisms_ok = T.homomorphisms_ok && homomorphism_on(r, G, g, h);
    for (int s = 0; s < 100; ++s) T.homomorphisms_ok = T.homomorphisms_ok && homomorphism_on(r, G, pick(rng), pick(rng));
    for (int s = 0; s < 4; ++s) {
      const u32 g = pick(rng);
      Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(r.dim, r.dim);
      for (u32 i = 0; i < r.dim; ++i) {
        const std::size_t off = static_cast<std::size_t>(g) * r.dim + i;
        M(r.perm[off], i) = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(r.phase[off]) / static_cast<double>(r.mod));
      }
      T.unitarity_defect = std::max(
          T.unitarity_defect, (M * M.adjoint() - Eigen::MatrixXcd::Identity(r.dim, r.dim)).cwiseAbs().maxCoeff());
    }
  }
  return T;
}

void CharacterTable::write_csv(std::ostream& os, const BorelGroup& G) const {
  os << "irrep_id,kind,j,jp,dimension,l\n";
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    const auto& r = irreps[i];
    os << i << ',' << kind_name(r.kind) << ',' << r.j << ',' << r.jp << ',' << r.dim << ','
       << dimension_by_level(G, r).l << '\n';
  }
}

std::map<u32, u32> brute_force_irreps(u32 order, const std::vector<u32>& table, std::uint64_t seed, unsigned retries) {
  if (table.size() != static_cast<std::size_t>(order) * order) throw ParameterError("multiplication table has wrong size");
  if (order > 1000) throw ResourceError("brute_force_irreps is limited to groups of order <= 1000");
  auto mul = [&](u32 x, u32 y) { return table[static_cast<std::size_t>(x) * order + y]; };
  std::vector<u32> inv(order, order);
  for (u32 x = 0; x < order; ++x)
    for (u32 y = 0; y < order; ++y)
      if (mul(x, y) == 0) inv[x] = y;
  std::vector<u32> cls(order, order);
  u32 classes = 0;
  for (u32 x = 0; x < order; ++x) {
    if (cls[x] != order) continue;
    for (u32 g = 0; g < order; ++g) cls[mul(mul(g, x), inv[g])] = classes;
    ++classes;
  }

  for (unsigned attempt = 0; attempt < retries; ++attempt) {
    std::mt19937_64 rng(seed + attempt);
    std::normal_distribution<double> normal;
    std::vector<std::complex<double>> alpha(classes);
    for (auto& a : alpha) a = {normal(rng), normal(rng)};
    Eigen::MatrixXcd H(order, order);
    for (u32 hp = 0; hp < order; ++hp)
      for (u32 h = 0; h < order; ++h)
        H(hp, h) = alpha[cls[mul(hp, inv[h])]] + std::conj(alpha[cls[mul(h, inv[hp])]]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = es.eigenvalues();
    const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    std::map<u32, u32> dims;
    bool ok = true;
    u32 total = 0;
    for (Eigen::Index i = 0; i < ev.size() && ok;) {
      Eigen::Index j = i + 1;
      while (j < ev.size() && ev(j) - ev(j - 1) <= 1e-7 * scale) ++j;
      const auto size = static_cast<u32>(j - i);
      const auto d = static_cast<u32>(std::lround(std::sqrt(static_cast<double>(size))));
      if (d * d != size) ok = false;
      ++dims[d];
      total += size;
      i = j;
    }
    if (ok && total == order) {
      u32 count = 0;
      for (auto [d, c] : dims) count += c;
      if (count == classes) return dims;
    }
  }
  throw StructureError("brute_force_irreps: eigenvalue clusters stayed degenerate after retries");
}

}  // namespace boxspace::reps
