#include "boxspace/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "boxspace/errors.hpp"
#include "boxspace/psl.hpp"

namespace boxspace::graph {

Graph::Graph(u32 vertices, const std::vector<Edge>& edges) : n_(vertices) {
  std::vector<u32> deg(vertices, 0);
  for (auto [u, v] : edges) {
    if (u >= vertices || v >= vertices) throw ParameterError("edge endpoint out of range");
    if (u == v) throw ParameterError("loop at vertex " + std::to_string(u));
    ++deg[u];
    ++deg[v];
  }
  off_.assign(static_cast<std::size_t>(vertices) + 1, 0);
  for (u32 v = 0; v < vertices; ++v) off_[v + 1] = off_[v] + deg[v];
  adj_.resize(off_[vertices]);
  std::vector<u64> pos(off_.begin(), off_.end() - 1);
  for (auto [u, v] : edges) {
    adj_[pos[u]++] = v;
    adj_[pos[v]++] = u;
  }
  for (u32 v = 0; v < vertices; ++v) {
    auto first = adj_.begin() + static_cast<std::ptrdiff_t>(off_[v]);
    auto last = adj_.begin() + static_cast<std::ptrdiff_t>(off_[v + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) throw ParameterError("repeated edge at vertex " + std::to_string(v));
  }
}

std::optional<u32> Graph::regularity() const {
  if (n_ == 0) return 0;
  const u32 k = degree(0);
  for (u32 v = 1; v < n_; ++v)
    if (degree(v) != k) return std::nullopt;
  return k;
}

bool Graph::has_edge(u32 u, u32 v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (u32 u = 0; u < n_; ++u)
    for (u32 v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph cayley_graph(u32 order, u32 identity, const std::function<u32(u32, u32)>& mul, const std::vector<u32>& gens) {
  std::vector<u32> sorted = gens;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw ParameterError("repeated generator");
  for (u32 s : gens) {
    if (s == identity) throw ParameterError("generating set contains the identity");
    bool has_inverse = false;
    for (u32 t : gens) has_inverse |= mul(s, t) == identity;
    if (!has_inverse) throw ParameterError("generating set is not closed under inverses");
  }
  std::vector<Edge> edges;
  for (u32 x = 0; x < order; ++x)
    for (u32 s : gens) {
      const u32 y = mul(x, s);
      if (x < y) edges.emplace_back(x, y);
    }
  Graph g(order, edges);
  const auto dist = bfs_distances(g, identity);
  const auto reached = static_cast<u32>(std::count_if(dist.begin(), dist.end(), [](int d) { return d >= 0; }));
  if (reached != order)
    throw StructureError("generators reach a subgroup of size " + std::to_string(reached) + " (of " +
                         std::to_string(order) + ")");
  return g;
}

Graph cayley_graph(const FiniteQuotient& q) {
  std::vector<Edge> edges;
  for (u32 x = 0; x < q.size; ++x) {
    std::vector<u32> nb;
    for (const auto& act : q.action) {
      const u32 y = act[x];
      if (y == x) throw ParameterError("a generator acts as the identity");
      nb.push_back(y);
    }
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) throw ParameterError("generator images repeat");
    for (u32 y : nb)
      if (x < y) edges.emplace_back(x, y);
  }
  Graph g(q.size, edges);
  if (!is_connected(g)) throw StructureError("generator images do not generate the quotient");
  return g;
}

Graph cycle(u32 n) {
  if (n < 3) throw ParameterError("cycle needs n >= 3");
  std::vector<Edge> e;
  for (u32 i = 0; i < n; ++i) e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return Graph(n, e);
}

Graph complete(u32 n) {
  std::vector<Edge> e;
  for (u32 i = 0; i < n; ++i)
    for (u32 j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph complete_bipartite(u32 a, u32 b) {
  std::vector<Edge> e;
  for (u32 i = 0; i < a; ++i)
    for (u32 j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (u32 i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, 5 + i);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

Graph path(u32 n) {
  std::vector<Edge> e;
  for (u32 i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph psl23_cayley() {
  using psl::PglMat;
  const PglMat S = PglMat::make(0, 1, -1, 0, 3, 1);
  const PglMat T = PglMat::make(1, 1, 0, 1, 3, 1);
  const auto closure = psl::quotient_from_generators({S, S.inverse(), T, T.inverse()});
  const auto& elems = closure.elements;
  auto index_of = [&](const PglMat& g) {
    return static_cast<u32>(std::find(elems.begin(), elems.end(), g) - elems.begin());
  };
  const u32 n = static_cast<u32>(elems.size());
  std::vector<u32> table(static_cast<std::size_t>(n) * n);
  for (u32 x = 0; x < n; ++x)
    for (u32 y = 0; y < n; ++y) table[static_cast<std::size_t>(x) * n + y] = index_of(elems[x] * elems[y]);
  return cayley_graph(n, 0, [&](u32 x, u32 s) { return table[static_cast<std::size_t>(x) * n + s]; },
                      {index_of(S), index_of(T), index_of(T.inverse())});
}

std::vector<int> bfs_distances(const Graph& g, u32 source) {
  std::vector<int> dist(g.size(), -1);
  std::deque<u32> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const u32 u = queue.front();
    queue.pop_front();
    for (u32 w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::vector<u32> components(const Graph& g) {
  constexpr u32 none = std::numeric_limits<u32>::max();
  std::vector<u32> comp(g.size(), none);
  u32 next = 0;
  for (u32 s = 0; s < g.size(); ++s) {
    if (comp[s] != none) continue;
    std::vector<u32> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      const u32 u = stack.back();
      stack.pop_back();
      for (u32 w : g.neighbors(u))
        if (comp[w] == none) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

u32 component_count(const Graph& g) {
  const auto c = components(g);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g) {
  std::vector<std::uint8_t> colour(g.size(), 2);
  for (u32 s = 0; s < g.size(); ++s) {
    if (colour[s] != 2) continue;
    colour[s] = 0;
    std::deque<u32> queue{s};
    while (!queue.empty()) {
      const u32 u = queue.front();
      queue.pop_front();
      for (u32 w : g.neighbors(u)) {
        if (colour[w] == 2) {
          colour[w] = colour[u] ^ 1;
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

std::optional<u32> girth(const Graph& g, const std::vector<u32>& roots) {
  std::vector<u32> rs = roots;
  if (rs.empty()) {
    rs.resize(g.size());
    for (u32 v = 0; v < g.size(); ++v) rs[v] = v;
  }
  u32 best = std::numeric_limits<u32>::max();
  std::vector<int> dist(g.size(), -1);
  std::vector<u32> parent(g.size(), 0), touched;
  for (u32 root : rs) {
    for (u32 v : touched) dist[v] = -1;
    touched.clear();
    dist[root] = 0;
    parent[root] = std::numeric_limits<u32>::max();
    touched.push_back(root);
    std::deque<u32> queue{root};
    while (!queue.empty()) {
      const u32 u = queue.front();
      queue.pop_front();
      if (2 * static_cast<u32>(dist[u]) >= best) break;
      for (u32 w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          touched.push_back(w);
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, static_cast<u32>(dist[u] + dist[w] + 1));
        }
      }
    }
  }
  if (best == std::numeric_limits<u32>::max()) return std::nullopt;
  return best;
}

CheegerResult cheeger_exact(const Graph& g, std::optional<double> lambda1, u32 cap) {
  CheegerResult res;
  const u32 n = g.size();
  if (n > cap) {
    if (!lambda1) throw ParameterError("graph above the exhaustive Cheeger cap needs lambda1 for bounds");
    const auto k = g.regularity();
    if (!k) throw ParameterError("Cheeger-Buser bounds need a regular graph");
    res.lower = *lambda1 / 2;
    res.upper = std::sqrt(2.0 * *k * *lambda1);
    return res;
  }
  if (n < 2) throw ParameterError("Cheeger constant needs at least two vertices");
  std::vector<std::uint8_t> in(n, 0);
  u32 size = 0;
  long boundary = 0;
  double best = std::numeric_limits<double>::infinity();
  std::uint32_t best_mask = 0, mask = 0;
  const std::uint64_t steps = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const u32 v = static_cast<u32>(std::countr_zero(i));
    const bool adding = !in[v];
    for (u32 w : g.neighbors(v)) boundary += (in[w] ? -1 : 1) * (adding ? 1 : -1);
    in[v] = adding;
    size += adding ? 1 : static_cast<u32>(-1);
    mask ^= std::uint32_t{1} << v;
    if (size > 0 && 2 * size <= n) {
      const double ratio = static_cast<double>(boundary) / size;
      if (ratio < best) {
        best = ratio;
        best_mask = mask;
      }
    }
  }
  res.exact = true;
  res.h = best;
  res.lower = res.upper = best;
  for (u32 v = 0; v < n; ++v)
    if (best_mask >> v & 1) res.witness.push_back(v);
  return res;
}

SpanningTreeData spanning_tree(const Graph& g) {
  SpanningTreeData t;
  if (g.size() == 0) return t;
  std::vector<std::uint8_t> seen(g.size(), 0);
  std::deque<u32> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const u32 u = queue.front();
    queue.pop_front();
    for (u32 w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        t.tree.emplace_back(std::min(u, w), std::max(u, w));
        queue.push_back(w);
      }
  }
  if (t.tree.size() + 1 != g.size()) throw ParameterError("spanning tree needs a connected graph");
  std::sort(t.tree.begin(), t.tree.end());
  for (const auto& e : g.edges())
    if (!std::binary_search(t.tree.begin(), t.tree.end(), e)) t.non_tree.push_back(e);
  return t;
}

std::vector<u32> CoverGraph::coordinates(u32 v) const {
  u64 a = v / base_size;
  std::vector<u32> out(r);
  for (u32 i = 0; i < r; ++i) {
    out[i] = static_cast<u32>(a % m);
    a /= m;
  }
  return out;
}

u32 CoverGraph::vertex(const std::vector<u32>& a, u32 base) const {
  u64 idx = 0;
  for (u32 i = r; i-- > 0;) idx = idx * m + (a.at(i) % m);
  return static_cast<u32>(idx * base_size + base);
}

u32 CoverGraph::translate(u32 v, u32 i) const {
  const u64 block = v / base_size, base = v % base_size;
  u64 place = 1;
  for (u32 j = 0; j < i; ++j) place *= m;
  const u64 digit = block / place % m;
  const u64 next = block - digit * place + ((digit + 1) % m) * place;
  return static_cast<u32>(next * base_size + base);
}

CoverGraph homology_cover(const Graph& g, u32 m, u64 vertex_cap) {
  if (m < 2) throw ParameterError("homology cover needs m >= 2");
  const auto tree = spanning_tree(g);
  CoverGraph c;
  c.base_size = g.size();
  c.m = m;
  c.r = tree.rank();
  u64 fiber = 1;
  for (u32 i = 0; i < c.r; ++i) {
    fiber *= m;
    if (fiber * g.size() > vertex_cap)
      throw ResourceError("homology cover exceeds vertex cap " + std::to_string(vertex_cap));
  }
  c.fiber_size = fiber;
  const u64 total = fiber * g.size();
  std::vector<Edge> edges;
  edges.reserve(fiber * g.edge_count());
  std::vector<u64> place(c.r, 1);
  for (u32 i = 1; i < c.r; ++i) place[i] = place[i - 1] * m;
  for (u64 a = 0; a < fiber; ++a) {
    const u64 base = a * g.size();
    for (auto [u, v] : tree.tree) edges.emplace_back(static_cast<u32>(base + u), static_cast<u32>(base + v));
    for (u32 kappa = 0; kappa < c.r; ++kappa) {
      const auto [v, w] = tree.non_tree[kappa];
      const u64 digit = a / place[kappa] % m;
      const u64 b = a - digit * place[kappa] + ((digit + 1) % m) * place[kappa];
      const u32 x = static_cast<u32>(base + v), y = static_cast<u32>(b * g.size() + w);
      edges.emplace_back(std::min(x, y), std::max(x, y));
    }
  }
  c.graph = Graph(static_cast<u32>(total), edges);
  c.projection.resize(total);
  for (u64 v = 0; v < total; ++v) c.projection[v] = static_cast<u32>(v % g.size());
  return c;
}

bool is_covering_map(const Graph& cover, const Graph& base, const std::vector<u32>& projection) {
  if (projection.size() != cover.size() || base.size() == 0 || cover.size() % base.size() != 0) return false;
  std::vector<u64> fiber(base.size(), 0);
  std::vector<u32> img;
  for (u32 v = 0; v < cover.size(); ++v) {
    const u32 pv = projection[v];
    if (pv >= base.size()) return false;
    ++fiber[pv];
    img.clear();
    for (u32 w : cover.neighbors(v)) img.push_back(projection[w]);
    std::sort(img.begin(), img.end());
    auto nb = base.neighbors(pv);
    if (!std::equal(img.begin(), img.end(), nb.begin(), nb.end())) return false;
  }
  return std::all_of(fiber.begin(), fiber.end(), [&](u64 f) { return f == fiber[0]; });
}

bool deck_action_ok(const CoverGraph& c) {
  const Graph& g = c.graph;
  for (u32 i = 0; i < c.r; ++i)
    for (u32 v = 0; v < g.size(); ++v) {
      const u32 tv = c.translate(v, i);
      if (c.projection[tv] != c.projection[v]) return false;
      for (u32 w : g.neighbors(v))
        if (!g.has_edge(tv, c.translate(w, i))) return false;
    }
  // orbit of (0, v) under the translations is the whole fibre
  std::vector<std::uint8_t> seen(g.size(), 0);
  for (u32 v = 0; v < c.base_size; ++v) {
    std::vector<u32> stack{v};
    seen[v] = 1;
    u64 orbit = 1;
    while (!stack.empty()) {
      const u32 x = stack.back();
      stack.pop_back();
      for (u32 i = 0; i < c.r; ++i) {
        const u32 y = c.translate(x, i);
        if (!seen[y]) {
          seen[y] = 1;
          ++orbit;
          stack.push_back(y);
        }
      }
    }
    if (orbit != c.fiber_size) return false;
  }
  return true;
}

void write_edge_list(std::ostream& os, const Graph& g) {
  os << g.size() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& is) {
  u64 n = 0, e = 0;
  if (!(is >> n >> e)) throw ParameterError("edge list: missing header \"V E\"");
  if (n > std::numeric_limits<u32>::max()) throw ParameterError("edge list: too many vertices");
  std::vector<Edge> edges;
  edges.reserve(e);
  for (u64 i = 0; i < e; ++i) {
    u64 u = 0, v = 0;
    if (!(is >> u >> v)) throw ParameterError("edge list: expected " + std::to_string(e) + " edges");
    if (u >= n || v >= n) throw ParameterError("edge list: endpoint out of range");
    edges.emplace_back(static_cast<u32>(u), static_cast<u32>(v));
  }
  return Graph(static_cast<u32>(n), edges);
}

void write_cover(std::ostream& os, const CoverGraph& c) {
  write_edge_list(os, c.graph);
  os << "projection " << c.graph.size() << '\n';
  for (u32 v = 0; v < c.graph.size(); ++v) os << v << ' ' << c.projection[v] << '\n';
}

std::pair<Graph, std::vector<u32>> read_cover(std::istream& is) {
  Graph g = read_edge_list(is);
  std::string tag;
  u64 n = 0;
  if (!(is >> tag >> n) || tag != "projection" || n != g.size()) throw ParameterError("cover: bad projection header");
  std::vector<u32> proj(g.size());
  for (u64 i = 0; i < n; ++i) {
    u64 u = 0, b = 0;
    if (!(is >> u >> b) || u >= n) throw ParameterError("cover: bad projection line");
    proj[u] = static_cast<u32>(b);
  }
  return {std::move(g), std::move(proj)};
}

}  // namespace boxspace::graph
