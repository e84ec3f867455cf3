#include "homlattice/basis.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "homlattice/errors.hpp"
#include "homlattice/homcount.hpp"
#include "homlattice/limits.hpp"
#include "homlattice/matroid_lattice.hpp"

namespace homlattice {

namespace {

class ExpansionCache {
public:
  using Key = std::pair<CanonicalKey, std::string>;

  bool find(const Key& key, std::vector<BasisTerm>& out) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return false;
    out = it->second;
    return true;
  }

  void insert(Key key, std::vector<BasisTerm> terms) {
    std::unique_lock lock(mutex_);
    entries_.emplace(std::move(key), std::move(terms));
  }

  void clear() {
    std::unique_lock lock(mutex_);
    entries_.clear();
  }

private:
  mutable std::shared_mutex mutex_;
  std::map<Key, std::vector<BasisTerm>> entries_;
};

ExpansionCache& cache() {
  static ExpansionCache instance;
  return instance;
}

std::vector<BasisTerm> condense(const Restriction& tau, const Graph& h) {
  const auto lattice = flat_lattice(tau.apply(h));
  std::map<CanonicalKey, BasisTerm> classes;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    auto q = quotient(h, lattice[i].partition);
    if (q.has_any_loop()) continue;
    auto key = canonical_form(q);
    auto it = classes.find(key);
    if (it == classes.end()) {
      auto rep = canonical_representative(q).with_selfloops_allowed(false);
      it = classes.emplace(key, BasisTerm{key, std::move(rep), 0}).first;
    }
    it->second.coefficient += lattice.mobius()[i];
  }

  const auto n = h.num_vertices();
  const auto own_key = canonical_form(h);
  std::vector<BasisTerm> terms;
  for (auto& [key, term] : classes) {
    // rank(rho) = |V(H)| - |V(H/rho)| is shared by every flat in the class.
    const bool expect_negative = (n - term.graph.num_vertices()) % 2 == 1;
    if (term.coefficient == 0 || (term.coefficient < 0) != expect_negative)
      throw internal_error("expansion coefficient violates the Rota sign law");
    if (key == own_key && term.coefficient != 1)
      throw internal_error("expansion coefficient of the pattern itself is not +1");
    terms.push_back(std::move(term));
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const BasisTerm& a, const BasisTerm& b) { return a.key.n > b.key.n; });
  return terms;
}

}  // namespace

BasisExpansion expand(const Restriction& tau, const Graph& h) {
  check_pattern_size(h.num_vertices(), "expand");
  if (h.has_any_loop()) throw invalid_input("expand: pattern has selfloops");
  BasisExpansion out{h, tau, {}};
  if (!tau.is_builtin()) {
    out.terms = condense(tau, h);
    return out;
  }
  ExpansionCache::Key key{canonical_form(h), tau.name()};
  if (cache().find(key, out.terms)) return out;
  // Built-in restrictions commute with relabelling, so the expansion of the
  // canonical representative serves every member of the class.
  out.terms = condense(tau, h);
  cache().insert(std::move(key), out.terms);
  return out;
}

void clear_expansion_cache() { cache().clear(); }

Count evaluate(const BasisExpansion& expansion, const Graph& host) {
  if (host.has_any_loop()) throw invalid_input("evaluate: host has selfloops");
  Integer total = 0;
  for (const auto& term : expansion.terms) {
    if (term.coefficient == 0) continue;
    total += term.coefficient * count_homomorphisms(term.graph, host);
  }
  if (total < 0) throw internal_error("evaluate: negative restricted homomorphism count");
  return total;
}

Rational evaluate_lincomb(const LinearCombination& lc, const Graph& host) {
  if (host.has_any_loop()) throw invalid_input("evaluate_lincomb: host has selfloops");
  Rational total = 0;
  for (const auto& term : lc.terms) {
    if (term.weight <= 0) throw invalid_input("linear combination weights must be positive");
    if (term.pattern.has_any_loop()) throw invalid_input("linear combination pattern has selfloops");
    total += term.weight * Rational(evaluate(expand(term.tau, term.pattern), host));
  }
  return total;
}

bool is_congruent(const LinearCombination& lc) {
  if (lc.terms.empty()) return true;
  const auto parity = lc.terms.front().pattern.num_vertices() % 2;
  return std::all_of(lc.terms.begin(), lc.terms.end(),
                     [&](const LincombTerm& t) { return t.pattern.num_vertices() % 2 == parity; });
}

LinearCombination lovasz_zeta_expansion(const Graph& h) {
  check_pattern_size(h.num_vertices(), "lovasz_zeta_expansion");
  if (h.has_any_loop()) throw invalid_input("lovasz_zeta_expansion: pattern has selfloops");
  const auto partitions = enumerate_flats(generators::complete(h.num_vertices()));
  std::map<CanonicalKey, std::pair<Graph, std::size_t>> classes;
  for (const auto& flat : partitions.flats()) {
    auto q = quotient(h, flat.partition);
    if (q.has_any_loop()) continue;
    auto key = canonical_form(q);
    auto it = classes.find(key);
    if (it == classes.end())
      it = classes.emplace(key, std::pair{canonical_representative(q).with_selfloops_allowed(false), 0})
               .first;
    ++it->second.second;
  }
  LinearCombination out;
  for (auto& [key, entry] : classes)
    out.terms.push_back(LincombTerm{Rational(entry.second), std::move(entry.first), Restriction::clique()});
  std::stable_sort(out.terms.begin(), out.terms.end(), [](const LincombTerm& a, const LincombTerm& b) {
    return a.pattern.num_vertices() > b.pattern.num_vertices();
  });
  return out;
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    if (!first) out << ';';
    out << (u + 1) << '-' << (v + 1);
    first = false;
  }
  return out.str();
}

std::string format_expansion(const BasisExpansion& expansion) {
  std::ostringstream out;
  for (const auto& term : expansion.terms) {
    out << (term.coefficient > 0 ? "+" : "") << term.coefficient << '\t' << term.graph.num_vertices()
        << '\t' << format_edge_list(term.graph) << '\n';
  }
  return out.str();
}

}  // namespace homlattice
