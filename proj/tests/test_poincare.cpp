#include <doctest.h>

#include <cmath>

#include "boxspace/errors.hpp"
#include "boxspace/graph.hpp"
#include "boxspace/poincare.hpp"
#include "boxspace/spectral.hpp"

using namespace boxspace;
using namespace boxspace::poincare;

namespace {

std::vector<u32> mod_fiber(u32 n, u32 base) {
  std::vector<u32> f;
  for (u32 v = 0; v < n; ++v) f.push_back(v % base);
  return f;
}

}  // namespace

TEST_CASE("kernel pair measure on Z4") {
  const auto G = GroupTable::cyclic(4);
  const auto mu = kernel_measure(G, {0, 2});
  CHECK(mu.pairs.size() == 4);
  CHECK(mu.D == 4);
  CHECK(mu.weight() == doctest::Approx(0.25));
  CHECK(mu.total_mass() == doctest::Approx(1.0));
  CHECK_THROWS(kernel_measure(G, {0}));
}

TEST_CASE("fibre measure agrees with the kernel measure on cyclic covers") {
  const auto a = kernel_measure(GroupTable::cyclic(8), {0, 4});
  const auto b = fiber_measure(mod_fiber(8, 4), 4);
  CHECK(a.D == b.D);
  auto pa = a.pairs, pb = b.pairs;
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  CHECK(pa == pb);
}

TEST_CASE("Poincare sums of simple maps") {
  const auto g = graph::cycle(4);
  const auto mu = kernel_measure(GroupTable::cyclic(4), {0, 2});
  LipschitzMap constant{"constant", Eigen::MatrixXd::Ones(4, 2)};
  CHECK(poincare_sum(constant, mu, g) == doctest::Approx(0.0));
  // unit-square corners: antipodes at distance sqrt2
  Eigen::MatrixXd sq(4, 2);
  sq << 0, 0, 1, 0, 1, 1, 0, 1;
  LipschitzMap corners{"corners", sq};
  CHECK(lipschitz_check(corners, g).ok);
  CHECK(poincare_sum(corners, mu, g) == doctest::Approx(2.0));
  LipschitzMap stretched{"stretched", 3 * sq};
  CHECK_FALSE(lipschitz_check(stretched, g).ok);
  CHECK_THROWS(poincare_sum(stretched, mu, g));
  CHECK(lipschitz_check(normalise_lipschitz(stretched, g), g).max_stretch == doctest::Approx(1.0));
}

TEST_CASE("double sum identity") {
  Eigen::MatrixXd x(5, 3);
  x.setRandom();
  LipschitzMap phi{"r", x};
  CHECK(double_sum(phi) == doctest::Approx(double_sum_identity(phi)));
  const auto c = centred(phi);
  CHECK(c.coords.colwise().sum().norm() < 1e-12);
  CHECK(double_sum(c) == doctest::Approx(double_sum(phi)));
}

TEST_CASE("edge sum and Dirichlet form") {
  const auto g = graph::cycle(6);
  Eigen::VectorXd f(6);
  f << 1, 2, 0, -1, 3, 0.5;
  const auto L = spectral::dense_matrix(g, spectral::Operator::laplacian);
  CHECK(dirichlet_twice(f, g) == doctest::Approx(2 * f.dot(L * f)));
  // ordered neighbour pairs, so each edge counts twice
  CHECK(edge_sum(f, g) == doctest::Approx(2 * f.dot(L * f)));
}

TEST_CASE("relative certificate on C8 over C4") {
  const auto cert = certify_relative(graph::cycle(8), graph::cycle(4), mod_fiber(8, 4), 0);
  CHECK(cert.epsilon == doctest::Approx(2 - std::sqrt(2.0)));
  CHECK(cert.C == doctest::Approx(4 / (2 - std::sqrt(2.0))));
  CHECK(cert.pass);
  CHECK(cert.worst_sum <= cert.C);
  CHECK(cert.sums.size() >= 5);
}

TEST_CASE("relative certificate on the K4 homology cover") {
  const auto c = graph::homology_cover(graph::complete(4), 2);
  CHECK(certify_relative(c.graph, graph::complete(4), c.projection, 1).pass);
}

TEST_CASE("certificate refused without a relative part") {
  CHECK_THROWS_AS(certify_relative(graph::cycle(4), graph::cycle(4), {0, 1, 2, 3}, 0), StructureError);
}

TEST_CASE("test suite is deterministic in the seed") {
  const auto g = graph::cycle(8);
  const auto L = spectral::lift_decomposition(g, graph::cycle(4), mod_fiber(8, 4));
  const auto a = test_map_suite(g, L, 3), b = test_map_suite(g, L, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].coords == b[i].coords);
    CHECK(lipschitz_check(a[i], g).ok);
  }
}

TEST_CASE("adversarial map on a long cycle") {
  const u32 n = 32;
  const auto g = graph::cycle(n);
  const auto d = spectral::dense_solve(g, spectral::Operator::laplacian);
  const double l1 = d.spectrum.values[1];
  const auto r = adversarial_map(GroupTable::cyclic(n), g, d.vectors.col(1), l1);
  CHECK(lipschitz_check(r.normalised, g).ok);
  CHECK(r.B == doctest::Approx(2 * l1 * r.f_norm_sq));
  CHECK(r.raw_sum == doctest::Approx(double(n) * n / l1));
  CHECK(r.epsilon_threshold == doctest::Approx(l1).epsilon(1e-9));
  Eigen::VectorXd flat = Eigen::VectorXd::Ones(n);
  CHECK_THROWS(adversarial_map(GroupTable::cyclic(n), g, flat, l1));
}
