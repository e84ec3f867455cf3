#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homlattice/count.hpp"

namespace homlattice {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1. Multiedges are collapsed on
// insertion; selfloops are only stored when the graph was created with
// selfloops_allowed.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n, bool selfloops_allowed = false);
  Graph(std::size_t n, std::span<const Edge> edges, bool selfloops_allowed = false);

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  bool selfloops_allowed() const { return selfloops_allowed_; }

  // Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  bool has_loop(Vertex v) const { return has_edge(v, v); }
  bool has_any_loop() const { return num_loops_ > 0; }
  std::size_t num_loops() const { return num_loops_; }

  // Sorted; contains v itself when v carries a selfloop.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  // Number of distinct neighbours other than v itself.
  std::size_t degree(Vertex v) const;

  // Edges as (u, v) with u <= v, lexicographically sorted.
  std::vector<Edge> edges() const;

  // Copy with loop storage permitted or forbidden; forbidding throws if a
  // loop exists.
  Graph with_selfloops_allowed(bool allowed) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t num_edges_ = 0;
  std::size_t num_loops_ = 0;
  bool selfloops_allowed_ = false;
};

// Partition of 0..n-1 into disjoint nonempty blocks. Blocks are kept in
// canonical order: each block sorted, blocks ordered by their least element.
class VertexPartition {
public:
  VertexPartition() = default;
  // Throws invalid_input unless blocks cover 0..n-1 exactly once.
  VertexPartition(std::size_t n, std::vector<std::vector<Vertex>> blocks);

  static VertexPartition singletons(std::size_t n);
  static VertexPartition single_block(std::size_t n);
  // labels[v] is the block id of v; ids need not be contiguous.
  static VertexPartition from_labels(std::span<const std::size_t> labels);

  std::size_t num_vertices() const { return block_of_.size(); }
  std::size_t num_blocks() const { return blocks_.size(); }
  const std::vector<std::vector<Vertex>>& blocks() const { return blocks_; }
  std::size_t block_of(Vertex v) const { return block_of_[v]; }

  // Every block of *this is contained in a block of coarser.
  bool refines(const VertexPartition& coarser) const;

  // Restricted growth string packed four bits per vertex. Requires n <= 16.
  std::uint64_t packed() const;

  friend bool operator==(const VertexPartition& a, const VertexPartition& b) {
    return a.block_of_ == b.block_of_;
  }

private:
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<std::size_t> block_of_;
};

// H/rho: one vertex per block (numbered as the blocks), an edge between
// distinct blocks joined by some edge of H, a selfloop on a block containing
// both endpoints of some edge. The result always allows selfloops.
Graph quotient(const Graph& h, const VertexPartition& rho);

struct CanonicalKey {
  std::uint32_t n = 0;
  // Upper triangle (diagonal included) of the adjacency matrix in column
  // order under the canonical labelling.
  std::string bits;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& key) const;
};

// Lexicographically least adjacency string over the labellings reachable by
// colour refinement and individualisation. Equal keys iff isomorphic.
CanonicalKey canonical_form(const Graph& g);

// Canonical labelling realising canonical_form: order[i] is the vertex of g
// placed at position i.
std::vector<Vertex> canonical_order(const Graph& g);

// g relabelled so that vertex order[i] becomes i.
Graph relabel(const Graph& g, std::span<const Vertex> order);

// g relabelled by its canonical order.
Graph canonical_representative(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

Count count_automorphisms(const Graph& h);

inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

// BFS distances from source; unreachable for other components.
std::vector<std::size_t> distances_from(const Graph& g, Vertex source);
std::size_t distance(const Graph& g, Vertex u, Vertex v);

struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> label;
};

Components connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);
// Subgraph induced on the listed vertices, renumbered in list order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Graph remove_vertex(const Graph& g, Vertex v);

namespace generators {

Graph edgeless(std::size_t k);
Graph path(std::size_t k);
Graph cycle(std::size_t k);
Graph complete(std::size_t k);
Graph complete_bipartite(std::size_t a, std::size_t b);
// K_{1,k}; the centre is vertex 0.
Graph star(std::size_t k);
// Apex 0, v_i = i, w_i = k + i, edges {a,v_i}, {v_i,w_i}, {w_i,a}.
Graph windmill(std::size_t k);
// a = 0, u_i = i, v_i = k + i, w_i = 2k + i, edges {a,u_i}, {a,v_i}, {v_i,w_i}.
Graph tkk(std::size_t k);

// Families: edgeless, path, cycle, clique, biclique (K_{k,k}), star,
// windmill, tkk.
Graph generate(std::string_view family, std::size_t k);

}  // namespace generators

}  // namespace homlattice
