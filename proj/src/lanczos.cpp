#include "boxspace/lanczos.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "boxspace/errors.hpp"
#include "boxspace/simd.hpp"

namespace boxspace::spectral {

LanczosResult lanczos_adjacency(const graph::Graph& g, const LanczosOptions& opt) {
  const auto& K = simd::active();
  const std::size_t n = g.size();
  if (n < 2) throw ParameterError("Lanczos needs at least two vertices");
  const double kdeg = g.regularity().value_or(1);
  const unsigned cap = static_cast<unsigned>(std::min<std::size_t>(opt.max_iter, n - (opt.deflate_constant ? 1 : 0)));

  std::vector<double> basis;  // row j is v_j
  basis.reserve(static_cast<std::size_t>(cap + 1) * n);
  std::vector<double> alpha, beta;
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<double> ones(n, inv_sqrt_n);

  auto orthogonalise = [&](std::vector<double>& w, std::size_t count) {
    for (int pass = 0; pass < 2; ++pass) {
      if (opt.deflate_constant) K.axpy(-K.dot(ones.data(), w.data(), n), ones.data(), w.data(), n);
      for (std::size_t j = 0; j < count; ++j) {
        const double* vj = basis.data() + j * n;
        K.axpy(-K.dot(vj, w.data(), n), vj, w.data(), n);
      }
    }
  };

  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> normal;
  std::vector<double> w(n);
  for (auto& x : w) x = normal(rng);
  orthogonalise(w, 0);
  K.scale(1.0 / std::sqrt(K.sum_sq(w.data(), n)), w.data(), n);
  basis.insert(basis.end(), w.begin(), w.end());

  LanczosResult res;
  res.isa = simd::isa_name(K.isa);
  std::vector<double> av(n);
  for (unsigned j = 0; j < cap; ++j) {
    const double* vj = basis.data() + static_cast<std::size_t>(j) * n;
    K.spmv(static_cast<std::uint32_t>(n), g.offsets().data(), g.adjacency().data(), vj, av.data());
    const double a = K.dot(vj, av.data(), n);
    alpha.push_back(a);
    orthogonalise(av, j + 1);
    const double b = std::sqrt(K.sum_sq(av.data(), n));
    res.iterations = j + 1;
    res.final_beta = b;
    if (b <= opt.breakdown_tol * kdeg) {
      res.exhausted = true;
      break;
    }
    if (j + 1 == cap) break;
    beta.push_back(b);
    K.scale(1.0 / b, av.data(), n);
    basis.insert(basis.end(), av.begin(), av.end());
  }
  if (!res.exhausted && res.iterations == n - (opt.deflate_constant ? 1u : 0u)) res.exhausted = true;

  const Eigen::Index m = static_cast<Eigen::Index>(alpha.size());
  Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
  Eigen::VectorXd sub = m > 1 ? Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(beta.data(), m - 1)) : Eigen::VectorXd();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  res.ritz.assign(es.eigenvalues().data(), es.eigenvalues().data() + m);

  auto ritz_pair = [&](Eigen::Index i) {
    std::vector<double> y(n, 0.0), ay(n);
    for (Eigen::Index j = 0; j < m; ++j)
      K.axpy(es.eigenvectors()(j, i), basis.data() + static_cast<std::size_t>(j) * n, y.data(), n);
    K.scale(1.0 / std::sqrt(K.sum_sq(y.data(), n)), y.data(), n);
    K.spmv(static_cast<std::uint32_t>(n), g.offsets().data(), g.adjacency().data(), y.data(), ay.data());
    K.axpy(-res.ritz[i], y.data(), ay.data(), n);
    return RitzPair{res.ritz[static_cast<std::size_t>(i)], std::sqrt(K.sum_sq(ay.data(), n))};
  };
  const Eigen::Index want = std::min<Eigen::Index>(opt.wanted, m);
  for (Eigen::Index i = 0; i < want; ++i) res.bottom.push_back(ritz_pair(i));
  for (Eigen::Index i = 0; i < want; ++i) res.top.push_back(ritz_pair(m - 1 - i));
  return res;
}

ExtremeResult extreme_eigenvalues(const graph::Graph& g, const LanczosOptions& opt, double tol) {
  LanczosOptions first = opt, second = opt;
  first.deflate_constant = second.deflate_constant = true;
  second.seed = opt.seed + 0x9e3779b97f4a7c15ULL;
  const auto a = lanczos_adjacency(g, first);
  const auto b = lanczos_adjacency(g, second);
  ExtremeResult r;
  r.largest = a.top.front().value;
  r.smallest = a.bottom.front().value;
  r.residual_largest = a.top.front().residual;
  r.residual_smallest = a.bottom.front().residual;
  r.start_disagreement = std::max(std::abs(a.top.front().value - b.top.front().value),
                                  std::abs(a.bottom.front().value - b.bottom.front().value));
  r.iterations = a.iterations;
  r.exhausted = a.exhausted && b.exhausted;
  r.converged = r.residual_largest <= tol && r.residual_smallest <= tol && r.start_disagreement <= tol;
  r.isa = a.isa;
  return r;
}

}  // namespace boxspace::spectral
