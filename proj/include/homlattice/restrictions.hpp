#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homlattice/graph.hpp"

namespace homlattice {

enum class RestrictionKind { independent_set, clique, locally_injective, locally_injective_radius, custom };

// A graphical restriction: maps a pattern H to a loop-free constraint graph
// on V(H). Homomorphisms counted under it must separate the endpoints of
// every constraint edge.
class Restriction {
public:
  using Map = std::function<Graph(const Graph&)>;

  static Restriction independent_set();
  static Restriction clique();
  static Restriction locally_injective();
  // Injective on every radius-r ball; radius 1 coincides with
  // locally_injective. Throws invalid_input for r == 0.
  static Restriction locally_injective_radius(std::size_t r);
  // User-supplied map. The result is validated on every application.
  static Restriction custom(std::string name, Map map);

  // "hom", "emb", "li", "li:R".
  static Restriction parse(std::string_view spec);

  RestrictionKind kind() const { return kind_; }
  // Radius for the locally injective kinds (1 for locally_injective).
  std::size_t radius() const { return radius_; }
  // Spec string for built-ins, the given name for custom restrictions.
  const std::string& name() const { return name_; }
  bool is_builtin() const { return kind_ != RestrictionKind::custom; }

  Graph apply(const Graph& h) const;

  friend bool operator==(const Restriction& a, const Restriction& b) {
    return a.kind_ == b.kind_ && a.radius_ == b.radius_ && a.name_ == b.name_;
  }

private:
  Restriction(RestrictionKind kind, std::size_t radius, std::string name, Map map = {})
      : kind_(kind), radius_(radius), name_(std::move(name)), map_(std::move(map)) {}

  RestrictionKind kind_;
  std::size_t radius_;
  std::string name_;
  Map map_;
};

inline Graph apply_restriction(const Restriction& tau, const Graph& h) { return tau.apply(h); }

struct MinorEntry {
  CanonicalKey key;
  Graph representative;  // canonically labelled, loop-free
  std::vector<VertexPartition> flats;
};

// The tau-minors of H: loop-free quotients H/rho over flats rho of
// M(tau(H)), one entry per isomorphism class, ordered by descending vertex
// count then key.
struct MinorSet {
  std::vector<MinorEntry> entries;
};

MinorSet tau_minors(const Restriction& tau, const Graph& h);

int max_minor_treewidth(const MinorSet& minors);

struct ContractionWitness {
  Graph source;             // W_k or T_{k,k}
  Graph constraint;         // tau(source)
  VertexPartition flat;     // blocks merged by the contraction
  Graph minor;              // source / flat
  Vertex apex_block = 0;    // block holding the apex a
};

// Identifies edge e_i = {x_i, y_i} of F with the blade edge {v_i, w_i} of W_k
// (k = |E(F)|) and merges blade vertices carrying the same F-vertex. Edges
// are taken in F.edges() order; an edge whose second endpoint alone was seen
// before is flipped so that the seen endpoint sits on v_i. Throws
// invalid_input for loops, isolated vertices or an edgeless F.
ContractionWitness windmill_contraction(const Graph& f);

// Merges w_i with u_i in T_{k,k}, a contraction under the radius-2 locally
// injective restriction yielding W_k.
ContractionWitness tkk_contraction(std::size_t k);

}  // namespace homlattice
