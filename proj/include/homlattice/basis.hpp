#pragma once

#include <string>
#include <vector>

#include "homlattice/count.hpp"
#include "homlattice/graph.hpp"
#include "homlattice/restrictions.hpp"

namespace homlattice {

struct BasisTerm {
  CanonicalKey key;
  Graph graph;  // canonically labelled, loop-free
  Integer coefficient;
};

// #Hom_tau(H, .) written as sum of coefficient * #Hom(graph, .), one term
// per isomorphism class of loop-free quotient, ordered by descending vertex
// count then key.
struct BasisExpansion {
  Graph pattern;
  Restriction tau = Restriction::independent_set();
  std::vector<BasisTerm> terms;
};

// Sums mu(0, rho) over the flats rho of M(tau(H)) whose quotient is
// loop-free, grouped by isomorphism class of H/rho. Asserts the sign law
// sgn(c) = (-1)^(|V(H)| - |V(H')|) on every coefficient and that H itself
// carries +1. Results for built-in restrictions are cached per
// (isomorphism class of H, restriction).
BasisExpansion expand(const Restriction& tau, const Graph& h);

// Exact #Hom_tau(H, host). Throws invalid_input for a host with selfloops.
Count evaluate(const BasisExpansion& expansion, const Graph& host);

struct LincombTerm {
  Rational weight;
  Graph pattern;
  Restriction tau = Restriction::independent_set();
};

struct LinearCombination {
  std::vector<LincombTerm> terms;
};

Rational evaluate_lincomb(const LinearCombination& lc, const Graph& host);

// All patterns in the support have vertex counts of the same parity.
bool is_congruent(const LinearCombination& lc);

// #Hom(H, .) as a positive combination of embedding counts of the loop-free
// quotients of H over the full partition lattice of V(H).
LinearCombination lovasz_zeta_expansion(const Graph& h);

// "u-v;u-v;..." with 1-based vertices.
std::string format_edge_list(const Graph& g);

// One line per term: signed coefficient, vertex count, edge list, separated
// by tabs.
std::string format_expansion(const BasisExpansion& expansion);

void clear_expansion_cache();

}  // namespace homlattice
