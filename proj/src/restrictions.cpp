#include "homlattice/restrictions.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "homlattice/errors.hpp"
#include "homlattice/homcount.hpp"
#include "homlattice/limits.hpp"
#include "homlattice/matroid_lattice.hpp"

namespace homlattice {

Restriction Restriction::independent_set() { return {RestrictionKind::independent_set, 0, "hom"}; }
Restriction Restriction::clique() { return {RestrictionKind::clique, 0, "emb"}; }
Restriction Restriction::locally_injective() { return {RestrictionKind::locally_injective, 1, "li"}; }

Restriction Restriction::locally_injective_radius(std::size_t r) {
  if (r == 0) throw invalid_input("locally injective radius must be >= 1");
  return {RestrictionKind::locally_injective_radius, r, "li:" + std::to_string(r)};
}

Restriction Restriction::custom(std::string name, Map map) {
  if (!map) throw invalid_input("custom restriction needs a map");
  return {RestrictionKind::custom, 0, std::move(name), std::move(map)};
}

Restriction Restriction::parse(std::string_view spec) {
  if (spec == "hom") return independent_set();
  if (spec == "emb") return clique();
  if (spec == "li") return locally_injective();
  if (spec.starts_with("li:")) {
    const auto digits = spec.substr(3);
    std::size_t r = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), r);
    if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty() || r == 0)
      throw invalid_input("bad locally injective radius in restriction '" + std::string(spec) + "'");
    return locally_injective_radius(r);
  }
  throw invalid_input("unknown restriction '" + std::string(spec) + "'");
}

namespace {

// Edge {u,w}, u != w, whenever some v has 1 <= d(u,v) <= r and 1 <= d(w,v) <= r.
Graph radius_constraint(const Graph& h, std::size_t r) {
  const auto n = h.num_vertices();
  Graph out(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto dist = distances_from(h, v);
    std::vector<Vertex> ball;
    for (Vertex u = 0; u < n; ++u)
      if (dist[u] != unreachable && dist[u] >= 1 && dist[u] <= r) ball.push_back(u);
    for (std::size_t i = 0; i < ball.size(); ++i)
      for (std::size_t j = i + 1; j < ball.size(); ++j) out.add_edge(ball[i], ball[j]);
  }
  return out;
}

}  // namespace

Graph Restriction::apply(const Graph& h) const {
  if (h.has_any_loop()) throw invalid_input("restrictions apply to loop-free patterns only");
  switch (kind_) {
    case RestrictionKind::independent_set:
      return generators::edgeless(h.num_vertices());
    case RestrictionKind::clique:
      return generators::complete(h.num_vertices());
    case RestrictionKind::locally_injective:
    case RestrictionKind::locally_injective_radius:
      return radius_constraint(h, radius_);
    case RestrictionKind::custom: {
      auto out = map_(h);
      if (out.num_vertices() != h.num_vertices())
        throw invalid_input("restriction '" + name_ + "' changed the vertex set");
      if (out.has_any_loop()) throw invalid_input("restriction '" + name_ + "' produced selfloops");
      return out.with_selfloops_allowed(false);
    }
  }
  throw internal_error("unhandled restriction kind");
}

MinorSet tau_minors(const Restriction& tau, const Graph& h) {
  check_pattern_size(h.num_vertices(), "tau_minors");
  const auto lattice = enumerate_flats(tau.apply(h));
  std::map<CanonicalKey, MinorEntry> classes;
  for (const auto& flat : lattice.flats()) {
    auto q = quotient(h, flat.partition);
    if (q.has_any_loop()) continue;
    auto key = canonical_form(q);
    auto it = classes.find(key);
    if (it == classes.end()) {
      auto rep = canonical_representative(q).with_selfloops_allowed(false);
      it = classes.emplace(key, MinorEntry{key, std::move(rep), {}}).first;
    }
    it->second.flats.push_back(flat.partition);
  }
  MinorSet out;
  for (auto& [key, entry] : classes) out.entries.push_back(std::move(entry));
  std::stable_sort(out.entries.begin(), out.entries.end(), [](const MinorEntry& a, const MinorEntry& b) {
    return a.key.n > b.key.n;
  });
  return out;
}

int max_minor_treewidth(const MinorSet& minors) {
  int best = -1;
  for (const auto& entry : minors.entries) best = std::max(best, treewidth_exact(entry.representative).width);
  return best;
}

namespace {

ContractionWitness finish_contraction(Graph source, const Restriction& tau, std::vector<std::size_t> labels) {
  auto flat = VertexPartition::from_labels(labels);
  auto constraint = tau.apply(source);
  if (!is_flat(constraint, flat)) throw internal_error("contraction is not a flat of the constraint matroid");
  auto minor = quotient(source, flat);
  if (minor.has_any_loop()) throw internal_error("contraction produced a selfloop");
  const auto apex = static_cast<Vertex>(flat.block_of(0));
  return ContractionWitness{std::move(source), std::move(constraint), std::move(flat),
                            minor.with_selfloops_allowed(false), apex};
}

}  // namespace

ContractionWitness windmill_contraction(const Graph& f) {
  if (f.has_any_loop()) throw invalid_input("windmill_contraction: F has selfloops");
  const auto edges = f.edges();
  const auto k = edges.size();
  if (k == 0) throw invalid_input("windmill_contraction: F has no edges");
  for (Vertex v = 0; v < f.num_vertices(); ++v)
    if (f.degree(v) == 0)
      throw invalid_input("windmill_contraction: F has an isolated vertex, which edge identification cannot produce");

  // labels[x] for a W_k vertex x: 0 for the apex, 1 + (F-vertex) for blades.
  std::vector<std::size_t> labels(2 * k + 1, 0);
  std::vector<bool> seen(f.num_vertices(), false);
  for (std::size_t i = 0; i < k; ++i) {
    auto [x, y] = edges[i];
    if (seen[y] && !seen[x]) std::swap(x, y);
    labels[1 + i] = 1 + x;      // v_i
    labels[1 + k + i] = 1 + y;  // w_i
    seen[x] = seen[y] = true;
  }
  return finish_contraction(generators::windmill(k), Restriction::locally_injective(), std::move(labels));
}

ContractionWitness tkk_contraction(std::size_t k) {
  if (k == 0) throw invalid_input("tkk_contraction: k must be >= 1");
  std::vector<std::size_t> labels(3 * k + 1);
  for (std::size_t x = 0; x < labels.size(); ++x) labels[x] = x;
  for (std::size_t i = 1; i <= k; ++i) labels[2 * k + i] = i;  // w_i joins u_i
  return finish_contraction(generators::tkk(k), Restriction::locally_injective_radius(2), std::move(labels));
}

}  // namespace homlattice
