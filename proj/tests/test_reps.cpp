#include <doctest.h>

#include <sstream>

#include "boxspace/errors.hpp"
#include "boxspace/reps.hpp"

using namespace boxspace;
using namespace boxspace::reps;

TEST_CASE("Borel group orders") {
  const auto a = BorelGroup::make(3, 1, 2);
  CHECK(a.order == 9);
  CHECK(a.abelian());
  const auto b = BorelGroup::make(3, 1, 3);
  CHECK(b.order == 81);
  CHECK_FALSE(b.abelian());
  CHECK(BorelGroup::make(5, 1, 2).order == 25);
  CHECK_THROWS_AS(BorelGroup::make(3, 2, 3), ParameterError);
}

TEST_CASE("group axioms") {
  const auto G = BorelGroup::make(3, 1, 3);
  for (u32 x = 0; x < G.order; ++x) {
    CHECK(G.mul(x, G.inverse(x)) == G.index(0, 0));
    for (u32 y = 0; y < G.order; y += 7)
      for (u32 z = 0; z < G.order; z += 11) CHECK(G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z)));
  }
}

TEST_CASE("characters and pi") {
  const auto G = BorelGroup::make(3, 1, 3);
  const auto rho0 = build_rho(G, 0);
  for (u32 g = 0; g < G.order; ++g) CHECK(rho0.is_identity_at(g));
  const auto pi = build_pi(G, 1);
  CHECK(pi.dim == 3);
  CHECK_THROWS_AS(build_pi(G, 3), ParameterError);
  for (u32 g = 0; g < G.order; g += 5)
    for (u32 h = 0; h < G.order; h += 3) CHECK(homomorphism_on(pi, G, g, h));
  const auto lvl = dimension_by_level(G, pi);
  CHECK(lvl.l == 0);
  CHECK(lvl.matches);
}

TEST_CASE("literal pi formula is an anti-homomorphism") {
  const auto G = BorelGroup::make(3, 1, 3);
  const auto lit = build_pi_literal(G, 1);
  bool all_forward = true, all_reversed = true;
  for (u32 g = 0; g < G.order; ++g)
    for (u32 h = 0; h < G.order; h += 4) {
      all_forward = all_forward && homomorphism_on(lit, G, g, h);
      all_reversed = all_reversed && homomorphism_on(lit, G, g, h, true);
    }
  CHECK_FALSE(all_forward);
  CHECK(all_reversed);
}

TEST_CASE("inventory is complete") {
  for (auto [q, n] : std::vector<std::pair<unsigned, unsigned>>{{3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}}) {
    const auto G = BorelGroup::make(q, 1, n);
    const auto T = irrep_inventory(G);
    CHECK(T.complete);
    CHECK(T.sum_dim_sq == G.order);
    CHECK(T.orthonormality_defect < 1e-9);
    CHECK(T.levels_ok);
    CHECK(T.homomorphisms_ok);
  }
  const auto T = irrep_inventory(BorelGroup::make(3, 1, 3));
  CHECK(T.dimension_counts == std::map<u32, u32>{{1, 27}, {3, 6}});
}

TEST_CASE("lifted characters sit at the top level") {
  const auto G = BorelGroup::make(3, 1, 3);
  const auto T = irrep_inventory(G);
  for (const auto& ir : T.irreps) {
    if (ir.dim != 1) continue;
    const auto lv = dimension_by_level(G, ir);
    CHECK(lv.matches);
  }
}

TEST_CASE("brute-force irreducible dimensions") {
  const auto a = BorelGroup::make(3, 1, 2);
  CHECK(brute_force_irreps(a.order, a.mult) == std::map<u32, u32>{{1, 9}});
  const auto b = BorelGroup::make(3, 1, 3);
  CHECK(brute_force_irreps(b.order, b.mult) == std::map<u32, u32>{{1, 27}, {3, 6}});
  CHECK(brute_force_irreps(1, {0}) == std::map<u32, u32>{{1, 1}});
}

TEST_CASE("table export") {
  const auto G = BorelGroup::make(3, 1, 2);
  std::ostringstream os;
  irrep_inventory(G).write_csv(os, G);
  CHECK(os.str().rfind("irrep_id,kind,j,jp,dimension,l", 0) == 0);
}
