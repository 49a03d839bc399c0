#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "boxspace/quotient.hpp"

namespace boxspace::graph {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using Edge = std::pair<u32, u32>;

inline constexpr u64 kDefaultVertexCap = 4'000'000;

// Simple undirected graph in CSR form with sorted neighbour lists.
class Graph {
 public:
  Graph() = default;
  // Throws ParameterError on loops, repeated edges or out-of-range endpoints.
  Graph(u32 vertices, const std::vector<Edge>& edges);

  u32 size() const { return n_; }
  u64 edge_count() const { return adj_.size() / 2; }
  std::span<const u32> neighbors(u32 v) const { return {adj_.data() + off_[v], adj_.data() + off_[v + 1]}; }
  u32 degree(u32 v) const { return static_cast<u32>(off_[v + 1] - off_[v]); }
  // Common degree, or nullopt if not regular.
  std::optional<u32> regularity() const;
  bool has_edge(u32 u, u32 v) const;
  std::vector<Edge> edges() const;  // u < v, lexicographic

  const std::vector<u64>& offsets() const { return off_; }
  const std::vector<u32>& adjacency() const { return adj_; }

  std::vector<std::string> labels;

 private:
  u32 n_ = 0;
  std::vector<u64> off_{0};
  std::vector<u32> adj_;
};

// Cayley graph x ~ x s. mul(x, s) returns the index of x*s. Throws if the generator
// list contains the identity, repeats, is not inverse closed, or does not generate.
Graph cayley_graph(u32 order, u32 identity, const std::function<u32(u32, u32)>& mul, const std::vector<u32>& gens);
Graph cayley_graph(const FiniteQuotient& g);

Graph cycle(u32 n);
Graph complete(u32 n);
Graph complete_bipartite(u32 a, u32 b);
Graph petersen();
Graph path(u32 n);
// PSL(2,3) with S = {[[0,1],[-1,0]], [[1,1],[0,1]]^{±1}}: 3-regular on 12 vertices.
Graph psl23_cayley();

std::vector<int> bfs_distances(const Graph& g, u32 source);
std::vector<u32> components(const Graph& g);  // component id per vertex
u32 component_count(const Graph& g);
bool is_connected(const Graph& g);
// 0/1 colouring when bipartite.
std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g);
bool is_bipartite(const Graph& g);

// Shortest cycle length, nullopt for forests. With roots given, only BFS trees from those
// roots are used; exact iff every automorphism orbit meets the root set.
std::optional<u32> girth(const Graph& g, const std::vector<u32>& roots = {});

struct CheegerResult {
  bool exact = false;
  double h = 0;  // exact value when exact
  std::vector<u32> witness;
  double lower = 0, upper = 0;  // Cheeger-Buser bounds when not exact
};

inline constexpr u32 kCheegerExactCap = 24;
// Exhaustive min |∂F|/|F| over 0 < |F| <= |V|/2. Above the cap the result carries the
// bounds lambda1/2 <= h <= sqrt(2 k lambda1) for the supplied lambda1 instead.
CheegerResult cheeger_exact(const Graph& g, std::optional<double> lambda1 = std::nullopt, u32 cap = kCheegerExactCap);

struct SpanningTreeData {
  std::vector<Edge> tree;
  std::vector<Edge> non_tree;  // kappa(e) = position, lexicographic
  u32 rank() const { return static_cast<u32>(non_tree.size()); }
};

// BFS from 0 with sorted adjacency; requires a connected graph.
SpanningTreeData spanning_tree(const Graph& g);

// m-homology cover: vertex (a, v) has index index(a) * |V| + v with index(a) = sum a_i m^i.
struct CoverGraph {
  Graph graph;
  u32 base_size = 0;
  u32 m = 0;
  u32 r = 0;
  u64 fiber_size = 0;
  std::vector<u32> projection;

  std::vector<u32> coordinates(u32 v) const;
  u32 vertex(const std::vector<u32>& a, u32 base) const;
  // Deck translation a -> a + e_i.
  u32 translate(u32 v, u32 i) const;
};

CoverGraph homology_cover(const Graph& g, u32 m, u64 vertex_cap = kDefaultVertexCap);

// Projection is locally bijective on every neighbourhood and fibres have equal size.
bool is_covering_map(const Graph& cover, const Graph& base, const std::vector<u32>& projection);
// Each unit translation is a graph automorphism preserving fibres, and orbits have size m^r.
bool deck_action_ok(const CoverGraph& cover);

void write_edge_list(std::ostream& os, const Graph& g);
Graph read_edge_list(std::istream& is);
void write_cover(std::ostream& os, const CoverGraph& c);
// Returns the cover graph and its projection.
std::pair<Graph, std::vector<u32>> read_cover(std::istream& is);

}  // namespace boxspace::graph
