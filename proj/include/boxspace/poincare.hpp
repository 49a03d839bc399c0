#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "boxspace/graph.hpp"
#include "boxspace/quotient.hpp"
#include "boxspace/spectral.hpp"

namespace boxspace::poincare {

using graph::Graph;
using graph::u32;
using graph::u64;

// Full multiplication table of a finite group; element 0 is the identity.
struct GroupTable {
  u32 n = 1;
  std::vector<u32> table;

  u32 mul(u32 a, u32 b) const { return table[static_cast<std::size_t>(a) * n + b]; }
  u32 inv(u32 a) const;
  static GroupTable cyclic(u32 n);
};

// mu(x, y) = 1/D on ordered pairs with x^-1 y in N \ {e} (or, for covers, x != y in one fibre).
struct KernelPairMeasure {
  std::vector<std::pair<u32, u32>> pairs;
  u64 D = 0;
  double weight() const { return 1.0 / static_cast<double>(D); }
  double total_mass() const;
};

KernelPairMeasure kernel_measure(const GroupTable& G, const std::vector<u32>& N);
KernelPairMeasure fiber_measure(const std::vector<u32>& fiber, u32 base_size);

struct LipschitzMap {
  std::string id;
  Eigen::MatrixXd coords;  // one row per vertex
};

struct LipschitzCheck {
  double max_stretch = 0;
  graph::Edge worst{0, 0};
  bool ok = false;  // max_stretch <= 1 + 1e-12
};

LipschitzCheck lipschitz_check(const LipschitzMap& phi, const Graph& g);
// Divides by the largest edge stretch (constants are returned unchanged).
LipschitzMap normalise_lipschitz(LipschitzMap phi, const Graph& g);

// Rejects maps that fail the Lipschitz check; compensated summation.
double poincare_sum(const LipschitzMap& phi, const KernelPairMeasure& mu, const Graph& g);

// All ordered pairs, directly.
double double_sum(const LipschitzMap& phi);
// 2|G| sum |phi|^2 - 2 |sum phi|^2
double double_sum_identity(const LipschitzMap& phi);
LipschitzMap centred(LipschitzMap phi);
// sum over ordered adjacent pairs of |f(x) - f(y)|^2 and 2 <f, L f>
double edge_sum(const Eigen::VectorXd& f, const Graph& g);
double dirichlet_twice(const Eigen::VectorXd& f, const Graph& g);

std::vector<LipschitzMap> test_map_suite(const Graph& g, const spectral::LiftDecomposition& lift, std::uint64_t seed);

struct PoincareCertificate {
  double epsilon = 0;
  double C = 0;
  double worst_sum = 0;
  std::string worst_map_id;
  bool pass = false;
  std::vector<std::pair<std::string, double>> sums;
};

inline constexpr double kPoincareTol = 1e-9;

// C = 2k/epsilon from the relative gap; refuses (StructureError) when there is no positive gap.
PoincareCertificate certify_relative(const Graph& cover, const Graph& base, const std::vector<u32>& fiber,
                                     std::uint64_t seed);
PoincareCertificate certify_relative(const Graph& cover, const spectral::LiftDecomposition& lift,
                                     const std::vector<u32>& fiber, const std::vector<LipschitzMap>& maps);

struct AdversarialReport {
  LipschitzMap raw;         // phi(x)(y) = f(y^-1 x) / sqrt(B)
  LipschitzMap normalised;  // raw divided by its max edge stretch
  double B = 0;
  double lambda1 = 0;
  double f_norm_sq = 0;
  double raw_sum = 0;         // sum over x, y of |phi(x) - phi(y)|^2
  double normalised_sum = 0;
  double centre_defect = 0;   // |sum_x phi(x)|
  // The bound sum <= (k / eps) |G|^2 fails for every eps above this value.
  double epsilon_threshold = 0;
};

// g must be the Cayley graph of G with vertex i = element i; f a Laplacian eigenvector for lambda1.
AdversarialReport adversarial_map(const GroupTable& G, const Graph& g, const Eigen::VectorXd& f, double lambda1);

}  // namespace boxspace::poincare
