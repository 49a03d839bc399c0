#include "boxspace/poincare.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "boxspace/errors.hpp"

namespace boxspace::poincare {

namespace {

// Neumaier summation
struct Accumulator {
  double sum = 0, comp = 0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

}  // namespace

u32 GroupTable::inv(u32 a) const {
  for (u32 b = 0; b < n; ++b)
    if (mul(a, b) == 0) return b;
  throw StructureError("element without inverse");
}

GroupTable GroupTable::cyclic(u32 n) {
  GroupTable G;
  G.n = n;
  G.table.resize(static_cast<std::size_t>(n) * n);
  for (u32 a = 0; a < n; ++a)
    for (u32 b = 0; b < n; ++b) G.table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return G;
}

double KernelPairMeasure::total_mass() const {
  return static_cast<double>(pairs.size()) / static_cast<double>(D);
}

KernelPairMeasure kernel_measure(const GroupTable& G, const std::vector<u32>& N) {
  std::vector<u32> members = N;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != 0) throw ParameterError("kernel must contain the identity");
  if (members.size() < 2) throw ParameterError("kernel is trivial");
  KernelPairMeasure mu;
  mu.D = static_cast<u64>(G.n) * (members.size() - 1);
  for (u32 x = 0; x < G.n; ++x)
    for (u32 z : members)
      if (z != 0) mu.pairs.emplace_back(x, G.mul(x, z));
  return mu;
}

KernelPairMeasure fiber_measure(const std::vector<u32>& fiber, u32 base_size) {
  std::vector<std::vector<u32>> members(base_size);
  for (u32 v = 0; v < fiber.size(); ++v) members.at(fiber[v]).push_back(v);
  const std::size_t s = members.empty() ? 0 : members[0].size();
  if (s < 2) throw ParameterError("fibres are trivial");
  KernelPairMeasure mu;
  mu.D = static_cast<u64>(fiber.size()) * (s - 1);
  for (const auto& f : members) {
    if (f.size() != s) throw StructureError("fibres have unequal sizes");
    for (u32 x : f)
      for (u32 y : f)
        if (x != y) mu.pairs.emplace_back(x, y);
  }
  return mu;
}

LipschitzCheck lipschitz_check(const LipschitzMap& phi, const Graph& g) {
  if (static_cast<u32>(phi.coords.rows()) != g.size()) throw ParameterError("map does not match the graph");
  LipschitzCheck c;
  for (auto [u, v] : g.edges()) {
    const double d = (phi.coords.row(u) - phi.coords.row(v)).norm();
    if (d > c.max_stretch) {
      c.max_stretch = d;
      c.worst = {u, v};
    }
  }
  c.ok = c.max_stretch <= 1 + 1e-12;
  return c;
}

LipschitzMap normalise_lipschitz(LipschitzMap phi, const Graph& g) {
  const auto c = lipschitz_check(phi, g);
  if (c.max_stretch > 0) phi.coords /= c.max_stretch;
  return phi;
}

double poincare_sum(const LipschitzMap& phi, const KernelPairMeasure& mu, const Graph& g) {
  const auto c = lipschitz_check(phi, g);
  if (!c.ok)
    throw ParameterError("map " + phi.id + " is not 1-Lipschitz: stretch " + std::to_string(c.max_stretch) +
                         " on edge " + std::to_string(c.worst.first) + "-" + std::to_string(c.worst.second));
  Accumulator acc;
  for (auto [x, y] : mu.pairs) acc.add((phi.coords.row(x) - phi.coords.row(y)).squaredNorm());
  return acc.value() * mu.weight();
}

double double_sum(const LipschitzMap& phi) {
  Accumulator acc;
  const Eigen::Index n = phi.coords.rows();
  for (Eigen::Index x = 0; x < n; ++x)
    for (Eigen::Index y = 0; y < n; ++y) acc.add((phi.coords.row(x) - phi.coords.row(y)).squaredNorm());
  return acc.value();
}

double double_sum_identity(const LipschitzMap& phi) {
  const double n = static_cast<double>(phi.coords.rows());
  Accumulator sq;
  for (Eigen::Index x = 0; x < phi.coords.rows(); ++x) sq.add(phi.coords.row(x).squaredNorm());
  const Eigen::RowVectorXd total = phi.coords.colwise().sum();
  return 2 * n * sq.value() - 2 * total.squaredNorm();
}

LipschitzMap centred(LipschitzMap phi) {
  const Eigen::RowVectorXd mean = phi.coords.colwise().mean();
  phi.coords.rowwise() -= mean;
  return phi;
}

double edge_sum(const Eigen::VectorXd& f, const Graph& g) {
  Accumulator acc;
  for (u32 u = 0; u < g.size(); ++u)
    for (u32 v : g.neighbors(u)) acc.add((f(u) - f(v)) * (f(u) - f(v)));
  return acc.value();
}

double dirichlet_twice(const Eigen::VectorXd& f, const Graph& g) {
  const Eigen::MatrixXd L = spectral::dense_matrix(g, spectral::Operator::laplacian);
  return 2 * f.dot(L * f);
}

std::vector<LipschitzMap> test_map_suite(const Graph& g, const spectral::LiftDecomposition& lift, std::uint64_t seed) {
  std::vector<LipschitzMap> maps;
  const u32 n = g.size();
  const Eigen::Index rel = lift.relative_vectors.cols();
  // (a) bottom relative eigenvectors, one at a time and stacked
  const Eigen::Index take = std::min<Eigen::Index>(3, rel);
  for (Eigen::Index i = 0; i < take; ++i)
    maps.push_back(normalise_lipschitz({"spectral_" + std::to_string(i), lift.relative_vectors.col(i)}, g));
  if (take > 1) maps.push_back(normalise_lipschitz({"spectral_stack", lift.relative_vectors.leftCols(take)}, g));
  // (b) distance to a few basepoints
  const u32 bases = std::min<u32>(4, n);
  for (u32 b = 0; b < bases; ++b) {
    const u32 root = static_cast<u32>(static_cast<u64>(b) * n / bases);
    const auto d = graph::bfs_distances(g, root);
    Eigen::MatrixXd c(n, 1);
    for (u32 v = 0; v < n; ++v) c(v, 0) = d[v];
    maps.push_back({"distance_" + std::to_string(root), c});
  }
  // (c) seeded random ±1 coordinates rescaled by their stretch
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 4; ++t) {
    Eigen::MatrixXd c(n, 3);
    for (u32 v = 0; v < n; ++v)
      for (int j = 0; j < 3; ++j) c(v, j) = (rng() & 1) ? 1.0 : -1.0;
    maps.push_back(normalise_lipschitz({"random_" + std::to_string(t), c}, g));
  }
  return maps;
}

PoincareCertificate certify_relative(const Graph& cover, const spectral::LiftDecomposition& lift,
                                     const std::vector<u32>& fiber, const std::vector<LipschitzMap>& maps) {
  if (lift.relative.values.empty()) throw StructureError("no kernel: the relative part is empty");
  if (!(lift.epsilon > 1e-12)) throw StructureError("relative gap is zero; no certificate");
  const auto k = cover.regularity();
  if (!k) throw ParameterError("certificate needs a regular graph");
  PoincareCertificate cert;
  cert.epsilon = lift.epsilon;
  cert.C = 2.0 * *k / lift.epsilon;
  const auto mu = fiber_measure(fiber, lift.lift_dimension);
  cert.pass = true;
  cert.worst_sum = -1;
  for (const auto& phi : maps) {
    const double s = poincare_sum(phi, mu, cover);
    cert.sums.emplace_back(phi.id, s);
    if (s > cert.worst_sum) {
      cert.worst_sum = s;
      cert.worst_map_id = phi.id;
    }
    if (s > cert.C + kPoincareTol) cert.pass = false;
  }
  return cert;
}

PoincareCertificate certify_relative(const Graph& cover, const Graph& base, const std::vector<u32>& fiber,
                                     std::uint64_t seed) {
  const auto lift = spectral::lift_decomposition(cover, base, fiber);
  return certify_relative(cover, lift, fiber, test_map_suite(cover, lift, seed));
}

AdversarialReport adversarial_map(const GroupTable& G, const Graph& g, const Eigen::VectorXd& f, double lambda1) {
  const u32 n = G.n;
  if (g.size() != n || static_cast<u32>(f.size()) != n) throw ParameterError("sizes do not match");
  AdversarialReport r;
  r.lambda1 = lambda1;
  r.B = edge_sum(f, g);
  if (!(r.B > 1e-14)) throw ParameterError("eigenvector is constant");
  r.f_norm_sq = f.squaredNorm();
  std::vector<u32> inv(n);
  for (u32 y = 0; y < n; ++y) inv[y] = G.inv(y);
  r.raw.id = "adversarial_raw";
  r.raw.coords.resize(n, n);
  const double s = 1.0 / std::sqrt(r.B);
  for (u32 x = 0; x < n; ++x)
    for (u32 y = 0; y < n; ++y) r.raw.coords(x, y) = f(G.mul(inv[y], x)) * s;
  r.normalised = normalise_lipschitz(r.raw, g);
  r.normalised.id = "adversarial";
  r.centre_defect = r.raw.coords.colwise().sum().norm();
  r.raw_sum = n <= 2000 ? double_sum(r.raw) : double_sum_identity(r.raw);
  r.normalised_sum = n <= 2000 ? double_sum(r.normalised) : double_sum_identity(r.normalised);
  const double k = g.regularity().value_or(0);
  r.epsilon_threshold = k * static_cast<double>(n) * static_cast<double>(n) / r.normalised_sum;
  return r;
}

}  // namespace boxspace::poincare
