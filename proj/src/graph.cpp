#include "homlattice/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <numeric>
#include <string>

#include "homlattice/errors.hpp"
#include "homlattice/limits.hpp"

namespace homlattice {

Graph::Graph(std::size_t n, bool selfloops_allowed)
    : adjacency_(n), selfloops_allowed_(selfloops_allowed) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges, bool selfloops_allowed)
    : Graph(n, selfloops_allowed) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
  if (v >= adjacency_.size())
    throw invalid_input("vertex " + std::to_string(v) + " out of range for graph on " +
                        std::to_string(adjacency_.size()) + " vertices");
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v && !selfloops_allowed_)
    throw invalid_input("selfloop on vertex " + std::to_string(u) + " in a loop-free graph");
  auto& row = adjacency_[u];
  auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it != row.end() && *it == v) return false;
  row.insert(it, v);
  if (u != v) {
    auto& other = adjacency_[v];
    other.insert(std::lower_bound(other.begin(), other.end(), u), u);
  } else {
    ++num_loops_;
  }
  ++num_edges_;
  return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  return adjacency_[v].size() - (has_loop(v) ? 1 : 0);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < adjacency_.size(); ++u)
    for (Vertex v : adjacency_[u])
      if (u <= v) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_selfloops_allowed(bool allowed) const {
  if (!allowed && num_loops_ > 0) throw invalid_input("graph carries selfloops");
  Graph copy = *this;
  copy.selfloops_allowed_ = allowed;
  return copy;
}

// ---------------------------------------------------------------------------

VertexPartition::VertexPartition(std::size_t n, std::vector<std::vector<Vertex>> blocks)
    : block_of_(n, n) {
  for (auto& block : blocks) {
    if (block.empty()) throw invalid_input("partition contains an empty block");
    std::sort(block.begin(), block.end());
  }
  std::sort(blocks.begin(), blocks.end());
  std::size_t covered = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Vertex v : blocks[b]) {
      if (v >= n) throw invalid_input("partition mentions vertex outside the graph");
      if (block_of_[v] != n) throw invalid_input("partition blocks overlap");
      block_of_[v] = b;
      ++covered;
    }
  }
  if (covered != n) throw invalid_input("partition does not cover every vertex");
  blocks_ = std::move(blocks);
}

VertexPartition VertexPartition::singletons(std::size_t n) {
  std::vector<std::vector<Vertex>> blocks(n);
  for (Vertex v = 0; v < n; ++v) blocks[v] = {v};
  return VertexPartition(n, std::move(blocks));
}

VertexPartition VertexPartition::single_block(std::size_t n) {
  if (n == 0) return VertexPartition(0, {});
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  return VertexPartition(n, {std::move(all)});
}

VertexPartition VertexPartition::from_labels(std::span<const std::size_t> labels) {
  std::vector<std::size_t> ids(labels.begin(), labels.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<std::vector<Vertex>> blocks(ids.size());
  for (Vertex v = 0; v < labels.size(); ++v) {
    auto idx = std::lower_bound(ids.begin(), ids.end(), labels[v]) - ids.begin();
    blocks[idx].push_back(v);
  }
  return VertexPartition(labels.size(), std::move(blocks));
}

bool VertexPartition::refines(const VertexPartition& coarser) const {
  if (coarser.num_vertices() != num_vertices())
    throw invalid_input("partitions over different vertex sets");
  for (const auto& block : blocks_) {
    const auto target = coarser.block_of(block.front());
    for (Vertex v : block)
      if (coarser.block_of(v) != target) return false;
  }
  return true;
}

std::uint64_t VertexPartition::packed() const {
  if (num_vertices() > max_pattern_limit)
    throw limit_exceeded("partition too large to pack");
  // Blocks are ordered by least element, so block ids already form a
  // restricted growth string.
  std::uint64_t key = 0;
  for (std::size_t v = 0; v < block_of_.size(); ++v)
    key |= static_cast<std::uint64_t>(block_of_[v]) << (4 * v);
  return key;
}

Graph quotient(const Graph& h, const VertexPartition& rho) {
  if (rho.num_vertices() != h.num_vertices())
    throw invalid_input("malformed partition: does not cover the vertices of the graph");
  Graph out(rho.num_blocks(), true);
  for (const auto& [u, v] : h.edges())
    out.add_edge(static_cast<Vertex>(rho.block_of(u)), static_cast<Vertex>(rho.block_of(v)));
  return out;
}

// ---------------------------------------------------------------------------
// Canonical labelling: colour refinement, individualisation of the first
// non-singleton cell, twin pruning. The key is the least adjacency string
// among all leaves of the search tree.

namespace {

using Row = std::uint32_t;
using Cells = std::vector<std::vector<Vertex>>;

struct BitGraph {
  std::size_t n = 0;
  std::vector<Row> rows;

  explicit BitGraph(const Graph& g) : n(g.num_vertices()), rows(n, 0) {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v : g.neighbors(u)) rows[u] |= Row{1} << v;
  }
  bool adj(Vertex u, Vertex v) const { return (rows[u] >> v) & 1u; }
  bool loop(Vertex v) const { return adj(v, v); }
};

Cells refine(const BitGraph& g, Cells cells) {
  const auto n = g.n;
  std::vector<std::size_t> cell_of(n);
  while (true) {
    std::vector<Row> masks(cells.size(), 0);
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (Vertex v : cells[c]) {
        cell_of[v] = c;
        masks[c] |= Row{1} << v;
      }
    auto signature = [&](Vertex v) {
      std::vector<int> sig;
      sig.reserve(cells.size() + 1);
      sig.push_back(g.loop(v) ? 1 : 0);
      for (Row m : masks) sig.push_back(std::popcount(g.rows[v] & m));
      return sig;
    };
    Cells next;
    next.reserve(n);
    for (const auto& cell : cells) {
      std::vector<std::pair<std::vector<int>, Vertex>> keyed;
      keyed.reserve(cell.size());
      for (Vertex v : cell) keyed.emplace_back(signature(v), v);
      std::sort(keyed.begin(), keyed.end());
      for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
        next.back().push_back(keyed[i].second);
      }
    }
    if (next.size() == cells.size()) return next;
    cells = std::move(next);
  }
}

std::string leaf_bits(const BitGraph& g, const Cells& cells) {
  std::string bits;
  bits.reserve(g.n * (g.n + 1) / 2);
  for (std::size_t j = 0; j < cells.size(); ++j)
    for (std::size_t i = 0; i <= j; ++i)
      bits.push_back(g.adj(cells[i].front(), cells[j].front()) ? '1' : '0');
  return bits;
}

bool twins(const BitGraph& g, Vertex x, Vertex y) {
  const Row mask = ~((Row{1} << x) | (Row{1} << y));
  return g.loop(x) == g.loop(y) && (g.rows[x] & mask) == (g.rows[y] & mask);
}

struct CanonicalSearch {
  const BitGraph& g;
  std::string best;
  std::vector<Vertex> best_order;
  bool have_best = false;

  void run(Cells cells) {
    cells = refine(g, std::move(cells));
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      auto bits = leaf_bits(g, cells);
      if (!have_best || bits < best) {
        best = std::move(bits);
        best_order.clear();
        for (const auto& c : cells) best_order.push_back(c.front());
        have_best = true;
      }
      return;
    }
    const auto t = static_cast<std::size_t>(target - cells.begin());
    const auto cell = cells[t];
    std::vector<Vertex> explored;
    for (Vertex x : cell) {
      if (std::any_of(explored.begin(), explored.end(),
                      [&](Vertex y) { return twins(g, x, y); }))
        continue;
      explored.push_back(x);
      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + t);
      child.push_back({x});
      std::vector<Vertex> rest;
      for (Vertex v : cell)
        if (v != x) rest.push_back(v);
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + t + 1, cells.end());
      run(std::move(child));
    }
  }
};

CanonicalSearch search_canonical(const BitGraph& bg) {
  CanonicalSearch search{bg, {}, {}, false};
  Cells initial;
  if (bg.n > 0) {
    initial.emplace_back(bg.n);
    std::iota(initial.front().begin(), initial.front().end(), Vertex{0});
  }
  search.run(std::move(initial));
  return search;
}

}  // namespace

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& key) const {
  return std::hash<std::string>{}(key.bits) ^ (static_cast<std::size_t>(key.n) * 0x9e3779b97f4a7c15ull);
}

CanonicalKey canonical_form(const Graph& g) {
  check_pattern_size(g.num_vertices(), "canonical_form");
  BitGraph bg(g);
  auto search = search_canonical(bg);
  return CanonicalKey{static_cast<std::uint32_t>(g.num_vertices()), std::move(search.best)};
}

std::vector<Vertex> canonical_order(const Graph& g) {
  check_pattern_size(g.num_vertices(), "canonical_order");
  BitGraph bg(g);
  return search_canonical(bg).best_order;
}

Graph relabel(const Graph& g, std::span<const Vertex> order) {
  const auto n = g.num_vertices();
  if (order.size() != n) throw invalid_input("relabel: order has wrong length");
  std::vector<Vertex> position(n, static_cast<Vertex>(n));
  for (Vertex i = 0; i < n; ++i) {
    if (order[i] >= n || position[order[i]] != n)
      throw invalid_input("relabel: order is not a permutation");
    position[order[i]] = i;
  }
  Graph out(n, g.selfloops_allowed());
  for (const auto& [u, v] : g.edges()) out.add_edge(position[u], position[v]);
  return out;
}

Graph canonical_representative(const Graph& g) {
  auto order = canonical_order(g);
  return relabel(g, order);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  check_pattern_size(a.num_vertices(), "is_isomorphic");
  check_pattern_size(b.num_vertices(), "is_isomorphic");
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() ||
      a.num_loops() != b.num_loops())
    return false;
  return canonical_form(a) == canonical_form(b);
}

// Orbit-stabiliser chain: |Aut| is the product over a vertex sequence of the
// orbit size of each vertex under the pointwise stabiliser of its
// predecessors. Orbit membership is decided by searching for one extension.
Count count_automorphisms(const Graph& h) {
  const auto n = h.num_vertices();
  check_pattern_size(n, "count_automorphisms");
  if (n == 0) return 1;
  BitGraph g(h);
  Cells all(1, std::vector<Vertex>(n));
  std::iota(all.front().begin(), all.front().end(), Vertex{0});
  const auto cells = refine(g, std::move(all));
  std::vector<std::size_t> colour(n);
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (Vertex v : cells[c]) colour[v] = c;

  // BFS order keeps each new vertex adjacent to earlier ones where possible.
  std::vector<Vertex> seq;
  std::vector<bool> seen(n, false);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::deque<Vertex> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      seq.push_back(v);
      for (Vertex w : h.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
  }

  std::vector<Vertex> image(n);
  std::vector<bool> used(n, false);
  auto consistent = [&](std::size_t depth, Vertex target) {
    const Vertex v = seq[depth];
    if (used[target] || colour[target] != colour[v] || g.loop(v) != g.loop(target)) return false;
    for (std::size_t d = 0; d < depth; ++d)
      if (g.adj(v, seq[d]) != g.adj(target, image[seq[d]])) return false;
    return true;
  };
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    for (Vertex t = 0; t < n; ++t) {
      if (!consistent(depth, t)) continue;
      image[seq[depth]] = t;
      used[t] = true;
      const bool ok = extend(depth + 1);
      used[t] = false;
      if (ok) return true;
    }
    return false;
  };

  Count total = 1;
  for (std::size_t level = 0; level < n; ++level) {
    // Fix seq[0..level-1] pointwise.
    std::fill(used.begin(), used.end(), false);
    for (std::size_t d = 0; d < level; ++d) {
      image[seq[d]] = seq[d];
      used[seq[d]] = true;
    }
    std::size_t orbit = 0;
    for (Vertex t = 0; t < n; ++t) {
      if (!consistent(level, t)) continue;
      image[seq[level]] = t;
      used[t] = true;
      if (extend(level + 1)) ++orbit;
      used[t] = false;
    }
    total *= orbit;
  }
  return total;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> distances_from(const Graph& g, Vertex source) {
  if (source >= g.num_vertices()) throw invalid_input("distance: vertex out of range");
  std::vector<std::size_t> dist(g.num_vertices(), unreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v))
      if (dist[w] == unreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::size_t distance(const Graph& g, Vertex u, Vertex v) {
  if (v >= g.num_vertices()) throw invalid_input("distance: vertex out of range");
  return distances_from(g, u)[v];
}

Components connected_components(const Graph& g) {
  Components out;
  out.label.assign(g.num_vertices(), unreachable);
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (out.label[s] != unreachable) continue;
    std::deque<Vertex> queue{s};
    out.label[s] = out.count;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v))
        if (out.label[w] == unreachable) {
          out.label[w] = out.count;
          queue.push_back(w);
        }
    }
    ++out.count;
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).count <= 1; }

bool is_tree(const Graph& g) {
  return g.num_vertices() >= 1 && !g.has_any_loop() && g.num_edges() + 1 == g.num_vertices() &&
         is_connected(g);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const auto offset = static_cast<Vertex>(a.num_vertices());
  Graph out(a.num_vertices() + b.num_vertices(), a.selfloops_allowed() || b.selfloops_allowed());
  for (const auto& [u, v] : a.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : b.edges()) out.add_edge(u + offset, v + offset);
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> position(g.num_vertices(), static_cast<Vertex>(g.num_vertices()));
  for (Vertex i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.num_vertices()) throw invalid_input("induced_subgraph: vertex out of range");
    position[vertices[i]] = i;
  }
  Graph out(vertices.size(), g.selfloops_allowed());
  for (const auto& [u, v] : g.edges())
    if (position[u] != g.num_vertices() && position[v] != g.num_vertices())
      out.add_edge(position[u], position[v]);
  return out;
}

Graph remove_vertex(const Graph& g, Vertex v) {
  if (v >= g.num_vertices()) throw invalid_input("remove_vertex: vertex out of range");
  std::vector<Vertex> keep;
  for (Vertex u = 0; u < g.num_vertices(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(g, keep);
}

namespace generators {

Graph edgeless(std::size_t k) { return Graph(k); }

Graph path(std::size_t k) {
  Graph g(k);
  for (Vertex i = 1; i < k; ++i) g.add_edge(i - 1, i);
  return g;
}

Graph cycle(std::size_t k) {
  if (k < 3) throw invalid_input("cycle requires k >= 3");
  Graph g = path(k);
  g.add_edge(static_cast<Vertex>(k - 1), 0);
  return g;
}

Graph complete(std::size_t k) {
  Graph g(k);
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) g.add_edge(u, static_cast<Vertex>(a + v));
  return g;
}

Graph star(std::size_t k) { return complete_bipartite(1, k); }

Graph windmill(std::size_t k) {
  Graph g(2 * k + 1);
  for (Vertex i = 1; i <= k; ++i) {
    const auto v = i;
    const auto w = static_cast<Vertex>(k + i);
    g.add_edge(0, v);
    g.add_edge(v, w);
    g.add_edge(w, 0);
  }
  return g;
}

Graph tkk(std::size_t k) {
  Graph g(3 * k + 1);
  for (Vertex i = 1; i <= k; ++i) {
    const auto u = i;
    const auto v = static_cast<Vertex>(k + i);
    const auto w = static_cast<Vertex>(2 * k + i);
    g.add_edge(0, u);
    g.add_edge(0, v);
    g.add_edge(v, w);
  }
  return g;
}

Graph generate(std::string_view family, std::size_t k) {
  if (k < 1) throw invalid_input("generator parameter must be >= 1");
  if (family == "edgeless") return edgeless(k);
  if (family == "path") return path(k);
  if (family == "cycle") return cycle(k);
  if (family == "clique") return complete(k);
  if (family == "biclique") return complete_bipartite(k, k);
  if (family == "star") return star(k);
  if (family == "windmill") return windmill(k);
  if (family == "tkk") return tkk(k);
  throw invalid_input("unknown graph family: " + std::string(family));
}

}  // namespace generators

}  // namespace homlattice
