#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "homlattice/count.hpp"
#include "homlattice/graph.hpp"

namespace homlattice {

// A flat of the graphic matroid M(F), stored as the partition of V(F) into
// the connected components of the flat. Every block is F-connected and
// rank = |V(F)| - number of blocks.
struct Flat {
  VertexPartition partition;
  std::size_t rank = 0;
};

bool order_leq(const Flat& lower, const Flat& upper);

// True iff partition covers V(F) and every block induces a connected
// subgraph of F.
bool is_flat(const Graph& constraint, const VertexPartition& partition);

// All flats of M(F) in nondecreasing rank order (index 0 is the bottom, the
// all-singleton partition), with mu(bottom, flat) once mobius_of_lattice has
// run.
class FlatLattice {
public:
  FlatLattice() = default;
  FlatLattice(Graph constraint, std::vector<Flat> flats);

  const Graph& constraint() const { return constraint_; }
  const std::vector<Flat>& flats() const { return flats_; }
  std::size_t size() const { return flats_.size(); }
  const Flat& operator[](std::size_t i) const { return flats_[i]; }

  // Index of the flat with this partition, or size() if it is not a flat.
  std::size_t index_of(const VertexPartition& partition) const;

  bool leq(std::size_t lower, std::size_t upper) const {
    return order_leq(flats_[lower], flats_[upper]);
  }

  // Indices of every flat below or equal to flats()[i], in nondecreasing
  // rank order. Enumerated blockwise, not by scanning the lattice.
  std::vector<std::size_t> ideal(std::size_t i) const;

  bool has_mobius() const { return !mobius_.empty(); }
  const std::vector<Integer>& mobius() const { return mobius_; }

private:
  friend FlatLattice mobius_of_lattice(FlatLattice lattice);

  Graph constraint_;
  std::vector<Flat> flats_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<Integer> mobius_;
};

// Enumerates set partitions of V(F) as restricted growth strings and keeps
// those whose blocks are connected in F. Throws for loops or oversize F.
FlatLattice enumerate_flats(const Graph& constraint);

// mu(0,0) = 1 and mu(0,r) = -sum_{s < r} mu(0,s), in rank order.
FlatLattice mobius_of_lattice(FlatLattice lattice);

// Every mu(0,r) is nonzero with sign (-1)^rank(r). Requires mobius filled.
bool check_rota_sign(const FlatLattice& lattice);

// enumerate_flats followed by mobius_of_lattice.
FlatLattice flat_lattice(const Graph& constraint);

}  // namespace homlattice
