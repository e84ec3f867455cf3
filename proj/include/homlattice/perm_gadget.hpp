#pragma once

#include <cstddef>
#include <vector>

#include "homlattice/count.hpp"
#include "homlattice/graph.hpp"
#include "homlattice/matrix.hpp"

namespace homlattice {

enum class GadgetRole { root, u, v, b, w, x, y, z };

struct GadgetVertex {
  GadgetRole role = GadgetRole::root;
  std::size_t row = 0;     // i for v(i,j) and b(i,j), 0 otherwise
  std::size_t column = 0;  // j for every role but the root
};

// Tree encoding a 0/1 matrix: per column j a path u_j, v(1,j), ..., v(n,j),
// w_j; a pendant b(i,j) on v(i,j) iff a(i,j) = 1; leaves x_j, y_j, z_j on
// w_j; a root adjacent to every u_j. Indices are 0-based.
struct GadgetTree {
  Graph graph;
  std::vector<GadgetVertex> roles;
  std::size_t n = 0;
  Vertex root = 0;
};

GadgetTree build_gadget(const BinaryMatrix& a);

// Injective homomorphisms between trees by memoised search over rooted
// child-to-neighbour assignments; a locally injective map between trees is
// injective, so only neighbourhoods need separating.
Count count_tree_embeddings(const Graph& t1, const Graph& t2);

// #Sub(T1, T2) = #Emb(T1, T2) / #Aut(T1), with #Aut(T1) = #Emb(T1, T1).
Count count_pattern_subtrees(const Graph& t1, const Graph& t2);

struct PermIdentity {
  Count permanent;
  Count subtrees;
  bool match = false;
};

// Compares perm(A) against #Sub(T_id, T_A). Requires n >= 5 so that the
// root is the unique vertex of degree n.
PermIdentity verify_perm_identity(const BinaryMatrix& a);

}  // namespace homlattice
