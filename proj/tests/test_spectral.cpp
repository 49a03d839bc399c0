#include <doctest.h>

#include <cmath>
#include <functional>
#include <sstream>

#include "boxspace/errors.hpp"
#include "boxspace/graph.hpp"
#include "boxspace/lanczos.hpp"
#include "boxspace/simd.hpp"
#include "boxspace/spectral.hpp"

using namespace boxspace;
using namespace boxspace::spectral;

TEST_CASE("small spectra") {
  const auto c4 = spectrum(graph::cycle(4), Operator::laplacian);
  REQUIRE(c4.values.size() == 4);
  const std::vector<double> expect{0, 2, 2, 4};
  for (int i = 0; i < 4; ++i) CHECK(c4.values[i] == doctest::Approx(expect[i]).epsilon(1e-12));
  const auto k4 = spectrum(graph::complete(4), Operator::adjacency);
  CHECK(k4.values[0] == doctest::Approx(-1));
  CHECK(k4.values[3] == doctest::Approx(3));
  const auto m = k4.multiplicities();
  REQUIRE(m.size() == 2);
  CHECK(m[0].second == 3);
  CHECK(k4.max_residual < 1e-10);
}

TEST_CASE("cycle spectrum closed form") {
  const unsigned n = 12;
  const auto s = spectrum(graph::cycle(n), Operator::laplacian);
  std::vector<double> cf;
  for (unsigned j = 0; j < n; ++j) cf.push_back(2 - 2 * std::cos(2 * M_PI * j / n));
  std::sort(cf.begin(), cf.end());
  for (unsigned j = 0; j < n; ++j) CHECK(s.values[j] == doctest::Approx(cf[j]).epsilon(1e-12));
  const auto a = convert(s, Operator::adjacency);
  CHECK(a.values.back() == doctest::Approx(2));
}

TEST_CASE("Ramanujan check") {
  CHECK(ramanujan_check(spectrum(graph::complete(4), Operator::laplacian), graph::complete(4)).pass());
  CHECK(ramanujan_check(spectrum(graph::cycle(12), Operator::adjacency), graph::cycle(12)).pass());
  CHECK(ramanujan_check(spectrum(graph::petersen(), Operator::adjacency), graph::petersen()).pass());
  const graph::Graph two(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(ramanujan_check(spectrum(two, Operator::adjacency), two).valid);
}

TEST_CASE("export format") {
  std::ostringstream os;
  spectrum(graph::complete(4), Operator::adjacency).write_csv(os);
  CHECK(os.str().find("eigenvalue,multiplicity") == 0);
}

TEST_CASE("lift decomposition of C8 over C4") {
  std::vector<graph::u32> fiber;
  for (graph::u32 v = 0; v < 8; ++v) fiber.push_back(v % 4);
  const auto L = lift_decomposition(graph::cycle(8), graph::cycle(4), fiber);
  CHECK(L.lift_dimension == 4);
  CHECK(L.lifted_vs_base < 1e-9);
  REQUIRE(L.relative.values.size() == 4);
  CHECK(L.relative.values[0] == doctest::Approx(2 - std::sqrt(2.0)));
  CHECK(L.relative.values[3] == doctest::Approx(2 + std::sqrt(2.0)));
  CHECK(L.epsilon == doctest::Approx(2 - std::sqrt(2.0)));
  CHECK(L.max_fiber_sum < 1e-8);
}

TEST_CASE("trivial quotient leaves no relative part") {
  std::vector<graph::u32> fiber{0, 1, 2, 3};
  const auto L = lift_decomposition(graph::cycle(4), graph::cycle(4), fiber);
  CHECK(L.relative.values.empty());
  CHECK(std::isinf(L.epsilon));
}

TEST_CASE("inconsistent fibres are rejected") {
  std::vector<graph::u32> fiber{0, 0, 1, 1, 2, 2, 3, 3};
  CHECK_THROWS(lift_decomposition(graph::cycle(8), graph::cycle(4), fiber));
}

TEST_CASE("lifted spectrum of the K4 homology cover") {
  const auto c = graph::homology_cover(graph::complete(4), 2);
  const auto L = lift_decomposition(c.graph, graph::complete(4), c.projection);
  CHECK(L.lifted_vs_base < 1e-9);
  CHECK(L.relative.values.size() == 28);
}

TEST_CASE("Chebyshev polynomials") {
  for (unsigned m = 0; m < 12; ++m)
    for (double x : {-0.9, -0.3, 0.0, 0.4, 0.99}) CHECK(chebyshev_u(m, x) == doctest::Approx(chebyshev_u_recurrence(m, x)));
  CHECK(chebyshev_u(3, 1.0) == doctest::Approx(4));
  CHECK(chebyshev_u(4, 2.0) == doctest::Approx(chebyshev_u_recurrence(4, 2.0)));
}

namespace {

// closed non-backtracking walks of length m by direct enumeration
u64 brute_nb(const graph::Graph& g, unsigned m) {
  u64 total = 0;
  std::vector<graph::u32> path;
  std::function<void(graph::u32)> go = [&](graph::u32 v) {
    if (path.size() == m + 1) {
      total += v == path[0];
      return;
    }
    for (auto w : g.neighbors(v)) {
      if (path.size() >= 2 && w == path[path.size() - 2]) continue;
      path.push_back(w);
      go(w);
      path.pop_back();
    }
  };
  for (graph::u32 s = 0; s < g.size(); ++s) {
    path = {s};
    go(s);
  }
  return total;
}

}  // namespace

TEST_CASE("non-backtracking traces against enumeration") {
  for (const auto& g : {graph::complete(7), graph::petersen(), graph::complete(4)}) {
    const auto t = nb_trace(g, 5);
    CHECK(t.nb[0] == static_cast<i128>(g.size()));
    for (unsigned m = 1; m <= 5; ++m) CHECK(t.nb[m] == static_cast<i128>(brute_nb(g, m)));
    const auto a = nb_trace_agreement(t, spectrum(g, Operator::adjacency).values);
    CHECK(a.pass);
  }
}

TEST_CASE("weighted roots on a vertex-transitive graph") {
  const auto g = graph::petersen();
  const auto full = nb_trace(g, 7);
  const auto one = nb_trace(g, 7, {{0, g.size()}});
  CHECK(full.nb == one.nb);
  CHECK(full.chebyshev == one.chebyshev);
}

TEST_CASE("trace inequality at m = 0 is an equality") {
  const auto g = graph::complete(7);
  const auto t = nb_trace(g, 2);
  // A = |V| and f(0) = 1
  const auto audit = trace_inequality_audit({1, 1, 1}, g.size(), t, 6.0);
  REQUIRE(!audit.rows.empty());
  CHECK(audit.rows[0].lhs == audit.rows[0].chebyshev);
  CHECK(audit.cosh_back == doctest::Approx(6.0));
}

TEST_CASE("Cheeger-Buser bounds") {
  const auto g = graph::petersen();
  const auto s = spectrum(g, Operator::laplacian);
  const auto h = graph::cheeger_exact(g);
  CHECK(cheeger_buser_holds(h.h, s.values[1], 3));
  CHECK_FALSE(cheeger_buser_holds(10.0, s.values[1], 3));
}

TEST_CASE("Lanczos extremes match the dense solve") {
  const auto g = graph::homology_cover(graph::petersen(), 2).graph;
  const auto dense = spectrum(g, Operator::adjacency);
  const auto ex = extreme_eigenvalues(g);
  CHECK(ex.converged);
  CHECK(ex.smallest == doctest::Approx(dense.values.front()).epsilon(1e-8));
  // largest nontrivial: first value strictly below the degree
  double second = 0;
  for (auto it = dense.values.rbegin(); it != dense.values.rend(); ++it)
    if (*it < 3 - 1e-8) { second = *it; break; }
  CHECK(ex.largest == doctest::Approx(second).epsilon(1e-8));
}

TEST_CASE("Lanczos result does not depend on the kernel ISA") {
  const auto g = graph::homology_cover(graph::complete(4), 3).graph;
  simd::force_isa(simd::Isa::scalar);
  const auto a = extreme_eigenvalues(g);
  simd::force_isa(std::nullopt);
  const auto b = extreme_eigenvalues(g);
  CHECK(a.largest == doctest::Approx(b.largest).epsilon(1e-9));
  CHECK(a.smallest == doctest::Approx(b.smallest).epsilon(1e-9));
}
