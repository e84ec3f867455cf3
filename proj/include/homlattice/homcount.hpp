#pragma once

#include <cstddef>
#include <vector>

#include "homlattice/count.hpp"
#include "homlattice/graph.hpp"

namespace homlattice {

enum class NodeKind { general, leaf, introduce, forget, join };

struct TreeNode {
  std::vector<Vertex> bag;  // sorted
  std::vector<std::size_t> children;
  NodeKind kind = NodeKind::general;
  Vertex vertex = 0;  // introduced or forgotten vertex
};

// Rooted tree decomposition. Nodes are stored in an arbitrary order; the
// tree is given by children lists reachable from root.
struct TreeDecomposition {
  std::vector<TreeNode> nodes;
  std::size_t root = 0;

  // Largest bag size minus one; -1 for the decomposition of the empty graph.
  int width() const;
  bool is_nice() const;
};

// Checks the three decomposition axioms (vertex cover, edge cover, connected
// occurrence) and that nodes form a tree under root. Loops are ignored.
bool is_valid_decomposition(const Graph& h, const TreeDecomposition& td);

struct TreewidthResult {
  int width = -1;
  TreeDecomposition decomposition;
  std::vector<Vertex> elimination_order;
};

// Exact treewidth by dynamic programming over eliminated vertex sets, with
// a decomposition built from an optimal elimination order. Among optimal
// orders the lexicographically least choice at each step is taken.
TreewidthResult treewidth_exact(const Graph& h);

// Nice form of td: leaves have empty bags, the root has an empty bag, every
// other node introduces or forgets one vertex or joins two children with
// equal bags. When pattern is given, introductions within a transition are
// ordered to add vertices adjacent to the current bag first.
TreeDecomposition make_nice(const TreeDecomposition& td, const Graph* pattern = nullptr);

// |Hom(pattern, host)| by bottom-up dynamic programming over td (made nice
// internally when it is not). Throws for loops or an invalid decomposition.
Count count_homomorphisms(const Graph& pattern, const Graph& host, const TreeDecomposition& td);

// Same, decomposing each connected component of pattern optimally and
// multiplying the component counts.
Count count_homomorphisms(const Graph& pattern, const Graph& host);

}  // namespace homlattice
