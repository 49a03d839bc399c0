#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "boxspace/graph.hpp"
#include "boxspace/zmod.hpp"

namespace boxspace::spectral {

using graph::Graph;
using graph::u32;
using graph::u64;
using zmod::i128;

inline constexpr u32 kDenseVertexCap = 4000;

enum class Operator { adjacency, laplacian };

struct Spectrum {
  std::vector<double> values;  // ascending
  Operator op = Operator::adjacency;
  u32 k = 0;
  double max_residual = 0;

  // (value, multiplicity) clusters with gaps above tol.
  std::vector<std::pair<double, u32>> multiplicities(double tol = 1e-8) const;
  void write_csv(std::ostream& os, double tol = 1e-8) const;
};

std::string operator_name(Operator op);

Eigen::MatrixXd dense_matrix(const Graph& g, Operator op);

struct DenseEigen {
  Spectrum spectrum;
  Eigen::MatrixXd vectors;  // column i belongs to spectrum.values[i]
};

// Eigen's symmetric solver plus explicit residuals; |V| <= kDenseVertexCap.
DenseEigen dense_solve(const Graph& g, Operator op);
Spectrum spectrum(const Graph& g, Operator op);
// k - mu, re-sorted.
Spectrum convert(const Spectrum& s, Operator target);

struct RamanujanCertificate {
  bool valid = false;  // connected and regular
  bool bipartite = false;
  u32 k = 0;
  double bound = 0;      // 2 sqrt(k-1)
  double worst = 0;      // largest |mu| over nontrivial adjacency eigenvalues
  double margin = 0;     // bound - worst
  bool pass_adjacency = false;
  bool pass_laplacian = false;
  bool pass() const { return valid && pass_adjacency && pass_laplacian; }
};

inline constexpr double kRamanujanTol = 1e-9;

RamanujanCertificate ramanujan_check(const Spectrum& s, const Graph& g, double tol = kRamanujanTol);
// From the nontrivial extremes (largest below k, smallest) of a connected non-bipartite graph.
RamanujanCertificate ramanujan_check_extremes(double largest_nontrivial, double smallest, const Graph& g, double tol);

struct LiftDecomposition {
  Spectrum lifted;    // Laplacian, on functions constant on fibres
  Spectrum relative;  // Laplacian, on functions summing to zero on fibres
  double epsilon = std::numeric_limits<double>::infinity();
  u32 lift_dimension = 0;
  double invariance_defect = 0;  // |P^T L Q|_max
  double max_fiber_sum = 0;      // over relative eigenvectors
  double lifted_vs_base = 0;     // max |lifted_i - base_i|, sorted
  Eigen::MatrixXd relative_vectors;  // in vertex coordinates of the cover
};

LiftDecomposition lift_decomposition(const Graph& cover, const Graph& base, const std::vector<u32>& fiber);

// nb[m] = tr T_m (closed non-backtracking walks of length m), chebyshev[m] = sum_r nb[m-2r].
struct TraceSequence {
  u32 p = 0;
  std::vector<i128> nb;
  std::vector<i128> chebyshev;
};

// Weighted roots (v, w) evaluate tr T_m as sum w (T_m)_vv; empty means every vertex once.
// Use one root of weight |V| for vertex-transitive graphs.
TraceSequence nb_trace(const Graph& g, unsigned M, const std::vector<std::pair<u32, u64>>& roots = {});

double chebyshev_u(unsigned m, double x);
double chebyshev_u_recurrence(unsigned m, double x);
// Spectral side of both sequences from adjacency eigenvalues.
std::vector<double> nb_trace_spectral(const std::vector<double>& adjacency, u32 p, unsigned M);
std::vector<double> chebyshev_trace_spectral(const std::vector<double>& adjacency, u32 p, unsigned M);

struct TraceAgreement {
  double max_rel_nb = 0;
  double max_rel_chebyshev = 0;
  bool pass = false;
};
TraceAgreement nb_trace_agreement(const TraceSequence& t, const std::vector<double>& adjacency, double tol = 1e-6);

struct TraceAuditRow {
  unsigned m;
  i128 lhs;  // A f(m)
  i128 chebyshev;
  i128 nb;
  bool holds;
};

struct TraceAudit {
  std::vector<TraceAuditRow> rows;
  double threshold = 0;      // 5^(71/72) + 5^(1/72)
  double threshold_alt = 0;  // sqrt5 (5^(35/72) + 5^(-35/72))
  double lambda = 0, psi = 0, cosh_back = 0;
  bool pass = false;
};

// A f(m) >= chebyshev[m] for every m; lambda is an eigenvalue above 2 sqrt p for the cosh check.
TraceAudit trace_inequality_audit(const std::vector<u64>& f, u64 A, const TraceSequence& t, double lambda);

// lambda1/2 <= h <= sqrt(2 k lambda1)
bool cheeger_buser_holds(double h, double lambda1, u32 k, double tol = 1e-9);

std::string to_string(i128 v);
double to_double(i128 v);

}  // namespace boxspace::spectral
