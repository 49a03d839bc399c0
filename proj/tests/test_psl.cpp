#include <doctest.h>

#include "boxspace/errors.hpp"
#include "boxspace/psl.hpp"
#include "boxspace/quaternion.hpp"

using namespace boxspace;
using namespace boxspace::psl;

TEST_CASE("canonical form and determinant") {
  const auto g = lps_embed({1, 2, 0, 0}, 29, 1, 12);
  CHECK(g == PglMat::make(25, 0, 0, 6, 29, 1));
  CHECK(g.a() == 1);
  CHECK(g.in_psl());
  const auto h = lps_embed({1, 0, 2, 0}, 29, 1, 12);
  CHECK(h == PglMat::make(1, 2, -2, 1, 29, 1));
  CHECK(lps_embed({1, 0, 0, 0}, 29, 1, 12).is_identity());
  CHECK_THROWS_AS(lps_embed({1, 2, 0, 0}, 29, 1, 11), ParameterError);
  CHECK_THROWS_AS(PglMat::make(3, 0, 0, 3, 3, 1), ParameterError);
}

TEST_CASE("scalars collapse") {
  CHECK(PglMat::make(2, 0, 0, 2, 5, 2).is_identity());
  CHECK(PglMat::make(2, 4, 6, 10, 7, 1) == PglMat::make(1, 2, 3, 5, 7, 1));
}

TEST_CASE("group laws") {
  const auto x = PglMat::make(1, 2, 3, 7, 5, 2), y = PglMat::make(2, 1, 1, 1, 5, 2);
  CHECK((x * x.inverse()).is_identity());
  CHECK(((x * y) * x) == (x * (y * x)));
  CHECK(x.pow(0).is_identity());
  CHECK(x.pow(3) == x * x * x);
  CHECK(reduce(PglMat::identity(5, 2), 1).is_identity());
  CHECK(reduce(x, 1) == PglMat::make(1, 2, 3, 2, 5, 1));
  CHECK_THROWS_AS(reduce(x, 3), ParameterError);
}

TEST_CASE("orders of PSL(2, q^n)") {
  CHECK(psl_order(3, 1) == 12);
  CHECK(psl_order(5, 1) == 60);
  CHECK(psl_order(29, 1) == 12180);
  CHECK(psl_order(3, 2) == 324);
  CHECK(psl_bruteforce_count(3, 1) == 12);
  CHECK(psl_bruteforce_count(5, 1) == 60);
  CHECK(psl_bruteforce_count(3, 2) == 324);
  CHECK(psl_enumerate(3, 2).size() == 324);
}

TEST_CASE("LPS generators generate PSL(2, 29)") {
  const auto gens = quat::enumerate_Sp(5);
  const auto letters = lps_generators(gens, 29, 1, 12);
  REQUIRE(letters.size() == 6);
  for (std::size_t l = 0; l < 6; l += 2) CHECK((letters[l] * letters[l + 1]).is_identity());
  const auto c = quotient_from_generators(letters);
  CHECK(c.quotient.size == 12180);
  CHECK(c.elements.front().is_identity());
}

TEST_CASE("closure cap raises a resource error") {
  const auto letters = lps_generators(quat::enumerate_Sp(5), 29, 1, 12);
  CHECK_THROWS_AS(subgroup_closure({letters[0], letters[2]}, 100), ResourceError);
  CHECK(subgroup_closure({PglMat::identity(3, 1)}).size() == 1);
}

TEST_CASE("congruence kernels") {
  const auto k321 = kernel_enumerate(3, 2, 1);
  CHECK(k321.elements.size() == 27);
  CHECK(k321.abelian);
  CHECK(k321.exponent == 3);
  CHECK(k321.product_of_cyclics);
  CHECK(kernel_enumerate(5, 2, 1).elements.size() == 125);
  CHECK(kernel_enumerate(3, 1, 1).elements.size() == 1);
  CHECK(kernel_enumerate(3, 3, 1).elements.size() == 729);
  CHECK_FALSE(kernel_enumerate(3, 3, 1).abelian);
  CHECK_THROWS_AS(kernel_enumerate(3, 1, 2), ParameterError);
}

TEST_CASE("kernel matches the filter oracle") {
  const auto all = psl_enumerate(3, 2);
  const auto filtered = kernel_by_filter(all, 1);
  std::vector<Key> keys;
  for (const auto& g : filtered) keys.push_back(g.key());
  std::sort(keys.begin(), keys.end());
  CHECK(keys == kernel_enumerate(3, 2, 1).sorted_keys);
}

TEST_CASE("kernel generators lie in the kernel and generate it") {
  const auto g = kernel_generators(3, 3, 1);
  const auto K = kernel_enumerate(3, 3, 1);
  const auto S = subgroup_closure({g[0], g[1], g[2]});
  CHECK(S.sorted_keys == K.sorted_keys);
}

TEST_CASE("MatrixGen closure") {
  const auto g = mgen_generators(3, 2);
  CHECK(subgroup_closure({g[0], g[1], g[2]}).size() == 27);
}

TEST_CASE("commutator identity holds for k <= n - 3") {
  for (unsigned n = 3; n <= 6; ++n)
    for (unsigned k = 0; k + 3 <= n; ++k) CHECK(commutator_identity(3, n, k).equal);
  CHECK(commutator_identity(5, 4, 1).equal);
  // one step past the range the two sides differ in the lower-left entry
  for (unsigned n = 2; n <= 5; ++n) CHECK_FALSE(commutator_identity(3, n, n - 2).equal);
}

TEST_CASE("image of q-th powers and commutators") {
  for (auto [q, n, k] : std::vector<std::array<unsigned, 3>>{{3, 2, 1}, {3, 3, 1}, {5, 2, 1}, {3, 4, 2}}) {
    const auto r = gamma_image_check(q, n, k);
    CHECK(r.equal);
  }
  CHECK(gamma_image_check(3, 3, 1).expected == 27);
  CHECK_THROWS_AS(gamma_image_check(3, 1, 1), ParameterError);
}
