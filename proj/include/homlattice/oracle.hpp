#pragma once

#include <cstdint>

#include "homlattice/count.hpp"
#include "homlattice/graph.hpp"
#include "homlattice/matrix.hpp"
#include "homlattice/restrictions.hpp"

// Brute-force reference counts. Nothing here calls into the lattice, basis,
// restriction or DP code; constraint relations and distances are recomputed
// from their definitions.
namespace homlattice::oracle {

inline constexpr std::uint64_t default_budget = 100'000'000;

// Enumerates all |V(G)|^|V(H)| maps. Throws limit_exceeded past budget.
Count brute_hom(const Graph& h, const Graph& g, std::uint64_t budget = default_budget);

// Homomorphisms separating tau-constrained pairs. Embeddings are checked as
// injective maps, the locally injective kinds as maps injective on every
// closed radius-r ball N_r(v).
Count brute_restricted(const Restriction& tau, const Graph& h, const Graph& g,
                       std::uint64_t budget = default_budget);

// Subgraphs (V', E') of G, E' within G[V'], isomorphic to H; enumerated by
// vertex subset then edge subset and tested by permutation.
Count brute_sub(const Graph& h, const Graph& g, std::uint64_t budget = default_budget);

// Homomorphisms from H/sigma to G mapping blocks [u] != [v] apart whenever
// {u,v} is a constraint edge of tau(H). sigma must be a flat of M(tau(H)).
Count brute_blockwise_restricted(const Restriction& tau, const Graph& h, const VertexPartition& sigma,
                                 const Graph& g, std::uint64_t budget = default_budget);

// Inclusion-exclusion over column subsets, n <= 20.
Count permanent_ryser(const BinaryMatrix& a);
// Sum over S_n, n <= 7.
Count permanent_direct(const BinaryMatrix& a);

}  // namespace homlattice::oracle
