#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boxspace/graph.hpp"

namespace boxspace::spectral {

struct LanczosOptions {
  unsigned max_iter = 1200;
  double breakdown_tol = 1e-10;  // relative to the degree
  std::uint64_t seed = 0;
  bool deflate_constant = true;
  unsigned wanted = 3;  // residuals are computed for this many Ritz values at each end
};

struct RitzPair {
  double value;
  double residual;  // |A y - theta y| for the unit Ritz vector y
};

struct LanczosResult {
  std::vector<double> ritz;  // ascending
  std::vector<RitzPair> bottom, top;
  unsigned iterations = 0;
  bool exhausted = false;  // Krylov space became invariant
  double final_beta = 0;
  std::string isa;
};

// Lanczos on the adjacency matrix with full (twice repeated) reorthogonalisation,
// optionally restricted to the complement of the constant vector.
LanczosResult lanczos_adjacency(const graph::Graph& g, const LanczosOptions& opt);

struct ExtremeResult {
  double largest = 0;   // largest adjacency eigenvalue off the constants
  double smallest = 0;
  double residual_largest = 0, residual_smallest = 0;
  double start_disagreement = 0;  // between two random starts
  unsigned iterations = 0;
  bool exhausted = false;
  bool converged = false;
  std::string isa;
};

inline constexpr double kExtremeTol = 1e-7;

ExtremeResult extreme_eigenvalues(const graph::Graph& g, const LanczosOptions& opt = {}, double tol = kExtremeTol);

}  // namespace boxspace::spectral
