#include "boxspace/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "boxspace/errors.hpp"

namespace boxspace::spectral {

std::string operator_name(Operator op) { return op == Operator::adjacency ? "adjacency" : "laplacian"; }

std::vector<std::pair<double, u32>> Spectrum::multiplicities(double tol) const {
  std::vector<std::pair<double, u32>> out;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    double sum = values[i];
    while (j < values.size() && values[j] - values[j - 1] <= tol) sum += values[j++];
    out.emplace_back(sum / static_cast<double>(j - i), static_cast<u32>(j - i));
    i = j;
  }
  return out;
}

void Spectrum::write_csv(std::ostream& os, double tol) const {
  os << "eigenvalue,multiplicity\n";
  os.precision(15);
  for (auto [v, m] : multiplicities(tol)) os << v << ',' << m << '\n';
}

Eigen::MatrixXd dense_matrix(const Graph& g, Operator op) {
  const u32 n = g.size();
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (u32 u = 0; u < n; ++u)
    for (u32 v : g.neighbors(u)) M(u, v) = op == Operator::adjacency ? 1.0 : -1.0;
  if (op == Operator::laplacian)
    for (u32 u = 0; u < n; ++u) M(u, u) = g.degree(u);
  return M;
}

DenseEigen dense_solve(const Graph& g, Operator op) {
  if (g.size() > kDenseVertexCap)
    throw ParameterError("dense mode is limited to " + std::to_string(kDenseVertexCap) + " vertices");
  const auto k = g.regularity();
  const Eigen::MatrixXd M = dense_matrix(g, op);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  if (es.info() != Eigen::Success) throw StructureError("dense eigensolver did not converge");
  DenseEigen out;
  out.spectrum.op = op;
  out.spectrum.k = k.value_or(0);
  out.spectrum.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + g.size());
  out.vectors = es.eigenvectors();
  double worst = 0;
  for (u32 i = 0; i < g.size(); ++i)
    worst = std::max(worst, (M * out.vectors.col(i) - out.spectrum.values[i] * out.vectors.col(i)).norm());
  out.spectrum.max_residual = worst;
  return out;
}

Spectrum spectrum(const Graph& g, Operator op) { return dense_solve(g, op).spectrum; }

Spectrum convert(const Spectrum& s, Operator target) {
  if (s.op == target) return s;
  Spectrum out = s;
  out.op = target;
  for (auto& v : out.values) v = static_cast<double>(s.k) - v;
  std::sort(out.values.begin(), out.values.end());
  return out;
}

namespace {

// Removes the value nearest to x, reporting its distance.
double remove_nearest(std::vector<double>& v, double x) {
  auto it = std::min_element(v.begin(), v.end(), [x](double a, double b) { return std::abs(a - x) < std::abs(b - x); });
  const double d = std::abs(*it - x);
  v.erase(it);
  return d;
}

}  // namespace

RamanujanCertificate ramanujan_check(const Spectrum& s, const Graph& g, double tol) {
  RamanujanCertificate c;
  const auto k = g.regularity();
  if (!k || *k < 2 || !graph::is_connected(g) || s.values.size() != g.size()) return c;
  c.k = *k;
  c.valid = true;
  c.bipartite = graph::is_bipartite(g);
  c.bound = 2.0 * std::sqrt(static_cast<double>(*k) - 1.0);
  const double kd = *k;

  std::vector<double> adj = convert(s, Operator::adjacency).values;
  remove_nearest(adj, kd);
  if (c.bipartite) remove_nearest(adj, -kd);
  c.worst = 0;
  for (double mu : adj) c.worst = std::max(c.worst, std::abs(mu));
  c.margin = c.bound - c.worst;
  c.pass_adjacency = c.worst <= c.bound + tol;

  std::vector<double> lap = convert(s, Operator::laplacian).values;
  remove_nearest(lap, 0.0);
  if (c.bipartite) remove_nearest(lap, 2 * kd);
  c.pass_laplacian = std::all_of(lap.begin(), lap.end(), [&](double l) {
    return l >= kd - c.bound - tol && l <= kd + c.bound + tol;
  });
  return c;
}

RamanujanCertificate ramanujan_check_extremes(double largest_nontrivial, double smallest, const Graph& g, double tol) {
  RamanujanCertificate c;
  const auto k = g.regularity();
  if (!k || *k < 2 || !graph::is_connected(g)) return c;
  c.valid = true;
  c.k = *k;
  c.bipartite = graph::is_bipartite(g);
  c.bound = 2.0 * std::sqrt(static_cast<double>(*k) - 1.0);
  if (c.bipartite) {
    c.valid = false;  // the extremes would have to exclude -k as well
    return c;
  }
  c.worst = std::max(std::abs(largest_nontrivial), std::abs(smallest));
  c.margin = c.bound - c.worst;
  c.pass_adjacency = largest_nontrivial <= c.bound + tol && smallest >= -c.bound - tol;
  const double kd = *k;
  // Laplacian extremes of the nontrivial part: k - largest and k - smallest.
  c.pass_laplacian = kd - largest_nontrivial >= kd - c.bound - tol && kd - smallest <= kd + c.bound + tol;
  return c;
}

LiftDecomposition lift_decomposition(const Graph& cover, const Graph& base, const std::vector<u32>& fiber) {
  const u32 n = cover.size(), h = base.size();
  if (fiber.size() != n || h == 0 || n % h != 0) throw ParameterError("fibre map has the wrong size");
  if (n > kDenseVertexCap) throw ParameterError("lift decomposition needs dense spectra");
  std::vector<std::vector<u32>> members(h);
  for (u32 v = 0; v < n; ++v) {
    if (fiber[v] >= h) throw ParameterError("fibre map points outside the base");
    members[fiber[v]].push_back(v);
  }
  const std::size_t s = n / h;
  for (const auto& f : members)
    if (f.size() != s) throw StructureError("fibres have unequal sizes");
  if (!graph::is_covering_map(cover, base, fiber)) throw StructureError("fibre map is not a covering map");

  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(n, h);
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(n, n - h);
  Eigen::Index col = 0;
  for (u32 b = 0; b < h; ++b) {
    const auto& f = members[b];
    for (u32 v : f) P(v, b) = 1.0 / std::sqrt(static_cast<double>(s));
    // Helmert basis of the sum-zero functions on the fibre
    for (std::size_t j = 1; j < s; ++j, ++col) {
      const double norm = std::sqrt(static_cast<double>(j * (j + 1)));
      for (std::size_t i = 0; i < j; ++i) Q(f[i], col) = 1.0 / norm;
      Q(f[j], col) = -static_cast<double>(j) / norm;
    }
  }
  const Eigen::MatrixXd L = dense_matrix(cover, Operator::laplacian);
  LiftDecomposition out;
  out.lift_dimension = static_cast<u32>(P.cols());
  const auto k = cover.regularity().value_or(0);
  out.lifted.op = out.relative.op = Operator::laplacian;
  out.lifted.k = out.relative.k = k;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> lift_es(P.transpose() * L * P);
  out.lifted.values.assign(lift_es.eigenvalues().data(), lift_es.eigenvalues().data() + h);
  const auto base_spec = spectrum(base, Operator::laplacian);
  for (u32 i = 0; i < h; ++i)
    out.lifted_vs_base = std::max(out.lifted_vs_base, std::abs(out.lifted.values[i] - base_spec.values[i]));

  if (n > h) {
    out.invariance_defect = (P.transpose() * L * Q).cwiseAbs().maxCoeff();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> rel_es(Q.transpose() * L * Q);
    out.relative.values.assign(rel_es.eigenvalues().data(), rel_es.eigenvalues().data() + (n - h));
    out.epsilon = out.relative.values.front();
    out.relative_vectors = Q * rel_es.eigenvectors();
    for (Eigen::Index c = 0; c < out.relative_vectors.cols(); ++c)
      for (const auto& f : members) {
        double sum = 0;
        for (u32 v : f) sum += out.relative_vectors(v, c);
        out.max_fiber_sum = std::max(out.max_fiber_sum, std::abs(sum));
      }
  }
  return out;
}

TraceSequence nb_trace(const Graph& g, unsigned M, const std::vector<std::pair<u32, u64>>& roots) {
  const auto k = g.regularity();
  if (!k || *k < 2) throw ParameterError("nb_trace needs a regular graph of degree >= 2");
  if (M > 30) throw ParameterError("nb_trace is limited to M <= 30");
  TraceSequence t;
  t.p = *k - 1;
  t.nb.assign(M + 1, 0);
  std::vector<std::pair<u32, u64>> rs = roots;
  if (rs.empty())
    for (u32 v = 0; v < g.size(); ++v) rs.emplace_back(v, 1);

  const u32 n = g.size();
  std::vector<i128> a(n), b(n), c(n);
  auto apply = [&](const std::vector<i128>& x, std::vector<i128>& y) {
    for (u32 u = 0; u < n; ++u) {
      i128 s = 0;
      for (u32 w : g.neighbors(u)) s += x[w];
      y[u] = s;
    }
  };
  for (auto [root, weight] : rs) {
    std::fill(a.begin(), a.end(), 0);
    a[root] = 1;  // T_0 e
    t.nb[0] += static_cast<i128>(weight);
    if (M == 0) continue;
    apply(a, b);  // T_1 e; diagonal entry is zero in a simple graph
    for (unsigned m = 2; m <= M; ++m) {
      apply(b, c);
      const i128 coef = m == 2 ? static_cast<i128>(*k) : static_cast<i128>(t.p);
      for (u32 u = 0; u < n; ++u) c[u] -= coef * a[u];
      t.nb[m] += static_cast<i128>(weight) * c[root];
      std::swap(a, b);
      std::swap(b, c);
    }
  }
  t.chebyshev.assign(M + 1, 0);
  for (unsigned m = 0; m <= M; ++m) t.chebyshev[m] = t.nb[m] + (m >= 2 ? t.chebyshev[m - 2] : 0);
  return t;
}

double chebyshev_u_recurrence(unsigned m, double x) {
  double u0 = 1, u1 = 2 * x;
  if (m == 0) return u0;
  for (unsigned i = 1; i < m; ++i) {
    const double u2 = 2 * x * u1 - u0;
    u0 = u1;
    u1 = u2;
  }
  return u1;
}

double chebyshev_u(unsigned m, double x) {
  const double ax = std::abs(x);
  if (ax < 1) {
    const double theta = std::acos(x);
    const double st = std::sin(theta);
    if (st < 1e-6) return chebyshev_u_recurrence(m, x);
    return std::sin((m + 1) * theta) / st;
  }
  if (ax - 1 < 1e-9) return chebyshev_u_recurrence(m, x);
  const double psi = std::acosh(ax);
  const double v = std::sinh((m + 1) * psi) / std::sinh(psi);
  return (x < 0 && m % 2 == 1) ? -v : v;
}

std::vector<double> chebyshev_trace_spectral(const std::vector<double>& adjacency, u32 p, unsigned M) {
  std::vector<double> out(M + 1, 0.0);
  const double sp = std::sqrt(static_cast<double>(p));
  for (unsigned m = 0; m <= M; ++m) {
    double s = 0;
    for (double mu : adjacency) s += chebyshev_u(m, mu / (2 * sp));
    out[m] = std::pow(sp, m) * s;
  }
  return out;
}

std::vector<double> nb_trace_spectral(const std::vector<double>& adjacency, u32 p, unsigned M) {
  const auto s = chebyshev_trace_spectral(adjacency, p, M);
  std::vector<double> out(M + 1);
  for (unsigned m = 0; m <= M; ++m) out[m] = m >= 2 ? s[m] - s[m - 2] : s[m];
  return out;
}

TraceAgreement nb_trace_agreement(const TraceSequence& t, const std::vector<double>& adjacency, double tol) {
  const unsigned M = static_cast<unsigned>(t.nb.size()) - 1;
  const auto nb = nb_trace_spectral(adjacency, t.p, M);
  const auto ch = chebyshev_trace_spectral(adjacency, t.p, M);
  TraceAgreement a;
  for (unsigned m = 0; m <= M; ++m) {
    const double en = to_double(t.nb[m]), ec = to_double(t.chebyshev[m]);
    a.max_rel_nb = std::max(a.max_rel_nb, std::abs(nb[m] - en) / std::max(1.0, std::abs(en)));
    a.max_rel_chebyshev = std::max(a.max_rel_chebyshev, std::abs(ch[m] - ec) / std::max(1.0, std::abs(ec)));
  }
  a.pass = a.max_rel_nb <= tol && a.max_rel_chebyshev <= tol;
  return a;
}

TraceAudit trace_inequality_audit(const std::vector<u64>& f, u64 A, const TraceSequence& t, double lambda) {
  if (f.size() > t.chebyshev.size()) throw ParameterError("more loop counts than trace terms");
  TraceAudit audit;
  bool ok = true;
  for (unsigned m = 0; m < f.size(); ++m) {
    TraceAuditRow row{m, static_cast<i128>(A) * static_cast<i128>(f[m]), t.chebyshev[m], t.nb[m], false};
    row.holds = row.lhs >= row.chebyshev && row.chebyshev >= row.nb;
    ok = ok && row.holds;
    audit.rows.push_back(row);
  }
  audit.threshold = std::pow(5.0, 71.0 / 72.0) + std::pow(5.0, 1.0 / 72.0);
  audit.threshold_alt = std::sqrt(5.0) * (std::pow(5.0, 35.0 / 72.0) + std::pow(5.0, -35.0 / 72.0));
  const double two_sqrt_p = 2 * std::sqrt(static_cast<double>(t.p));
  audit.lambda = lambda;
  if (lambda >= two_sqrt_p) {
    audit.psi = std::acosh(lambda / two_sqrt_p);
    audit.cosh_back = two_sqrt_p * std::cosh(audit.psi);
  }
  audit.pass = ok && audit.threshold < 6 && std::abs(audit.threshold - audit.threshold_alt) < 1e-12 &&
               (lambda < two_sqrt_p || std::abs(audit.cosh_back - lambda) <= 1e-9 * lambda);
  return audit;
}

bool cheeger_buser_holds(double h, double lambda1, u32 k, double tol) {
  return lambda1 / 2 <= h + tol && h <= std::sqrt(2.0 * k * lambda1) + tol;
}

std::string to_string(i128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  std::string s;
  while (v != 0) {
    const int d = static_cast<int>(v % 10);
    s.push_back(static_cast<char>('0' + (neg ? -d : d)));
    v /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

double to_double(i128 v) { return static_cast<double>(v); }

}  // namespace boxspace::spectral
