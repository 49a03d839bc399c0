#include <doctest.h>

#include <random>

#include "boxspace/graph.hpp"
#include "boxspace/simd.hpp"

using namespace boxspace;
using namespace boxspace::simd;

namespace {

std::vector<double> randoms(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1, 1);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

std::vector<const Kernels*> vector_kernels() {
  std::vector<const Kernels*> out;
  if (auto* k = avx2_kernels(); k && isa_available(Isa::avx2)) out.push_back(k);
  if (auto* k = neon_kernels(); k && isa_available(Isa::neon)) out.push_back(k);
  return out;
}

}  // namespace

TEST_CASE("isa names parse back") {
  for (Isa i : {Isa::scalar, Isa::avx2, Isa::neon}) CHECK(parse_isa(isa_name(i)) == i);
  CHECK_FALSE(parse_isa("sse9").has_value());
  CHECK(isa_available(Isa::scalar));
  CHECK(isa_available(detect_isa()));
}

TEST_CASE("forced dispatch") {
  force_isa(Isa::scalar);
  CHECK(active().isa == Isa::scalar);
  force_isa(std::nullopt);
  CHECK(active().isa == detect_isa());
}

TEST_CASE("vector kernels agree with scalar ones on every tail length") {
  std::mt19937_64 rng(11);
  const auto& s = scalar_kernels();
  for (const Kernels* v : vector_kernels()) {
    for (std::size_t n = 0; n <= 67; ++n) {
      const auto x = randoms(n, rng), y = randoms(n, rng);
      CHECK(v->dot(x.data(), y.data(), n) == doctest::Approx(s.dot(x.data(), y.data(), n)).epsilon(1e-12));
      CHECK(v->sum_sq(x.data(), n) == doctest::Approx(s.sum_sq(x.data(), n)).epsilon(1e-12));
      auto y1 = y, y2 = y;
      s.axpy(0.37, x.data(), y1.data(), n);
      v->axpy(0.37, x.data(), y2.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(y2[i] == doctest::Approx(y1[i]).epsilon(1e-14));
      auto z1 = x, z2 = x;
      s.scale(-1.5, z1.data(), n);
      v->scale(-1.5, z2.data(), n);
      CHECK(z1 == z2);
    }
  }
}

TEST_CASE("spmv matches scalar on graphs of mixed degree") {
  std::mt19937_64 rng(5);
  const auto& s = scalar_kernels();
  for (const auto& g : {graph::petersen(), graph::cycle(13), graph::complete(9), graph::path(7),
                        graph::homology_cover(graph::complete(4), 3).graph}) {
    const auto x = randoms(g.size(), rng);
    std::vector<double> y1(g.size()), y2(g.size());
    s.spmv(g.size(), g.offsets().data(), g.adjacency().data(), x.data(), y1.data());
    for (graph::u32 v = 0; v < g.size(); ++v) {
      double acc = 0;
      for (auto w : g.neighbors(v)) acc += x[w];
      CHECK(y1[v] == doctest::Approx(acc).epsilon(1e-14));
    }
    for (const Kernels* k : vector_kernels()) {
      k->spmv(g.size(), g.offsets().data(), g.adjacency().data(), x.data(), y2.data());
      for (graph::u32 v = 0; v < g.size(); ++v) CHECK(y2[v] == doctest::Approx(y1[v]).epsilon(1e-13));
    }
  }
}
