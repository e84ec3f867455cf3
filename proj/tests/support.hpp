#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "homlattice/graph.hpp"

namespace testing {

using homlattice::Edge;
using homlattice::Graph;
using homlattice::Vertex;

inline Graph make(std::size_t n, std::initializer_list<Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// G(n, p).
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// G(n, m), sparse hosts.
inline Graph random_sparse(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  Graph g(n);
  while (g.num_edges() < m) {
    const Vertex u = pick(rng), v = pick(rng);
    if (u != v) g.add_edge(u, v);
  }
  return g;
}

// Permutation test, no canonical labelling involved.
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  const auto n = a.num_vertices();
  if (n != b.num_vertices() || a.num_edges() != b.num_edges() || a.num_loops() != b.num_loops()) return false;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  const auto edges = a.edges();
  do {
    if (std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return b.has_edge(perm[e.first], perm[e.second]); }))
      return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::vector<Edge> all_pairs(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

// Every loop-free graph on n labelled vertices, n <= 7.
inline std::vector<Graph> all_labelled(std::size_t n) {
  const auto pairs = all_pairs(n);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    out.push_back(std::move(g));
  }
  return out;
}

// One graph per isomorphism class on n vertices.
inline std::vector<Graph> all_unlabelled(std::size_t n) {
  std::map<homlattice::CanonicalKey, Graph> classes;
  for (auto& g : all_labelled(n)) classes.try_emplace(homlattice::canonical_form(g), g);
  std::vector<Graph> out;
  for (auto& [key, g] : classes) out.push_back(std::move(g));
  return out;
}

inline std::vector<Graph> all_unlabelled_upto(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& g : all_unlabelled(n)) out.push_back(std::move(g));
  return out;
}

// Labelled trees from Pruefer sequences, one per isomorphism class.
inline std::vector<Graph> all_trees(std::size_t n) {
  if (n == 1) return {Graph(1)};
  if (n == 2) return {make(2, {{0, 1}})};
  std::map<homlattice::CanonicalKey, Graph> classes;
  std::vector<Vertex> seq(n - 2, 0);
  while (true) {
    std::vector<std::size_t> degree(n, 1);
    for (Vertex x : seq) ++degree[x];
    Graph t(n);
    for (Vertex x : seq) {
      Vertex leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      t.add_edge(leaf, x);
      --degree[leaf];
      --degree[x];
    }
    std::vector<Vertex> last;
    for (Vertex v = 0; v < n; ++v)
      if (degree[v] == 1) last.push_back(v);
    t.add_edge(last[0], last[1]);
    classes.try_emplace(homlattice::canonical_form(t), t);

    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  std::vector<Graph> out;
  for (auto& [key, g] : classes) out.push_back(std::move(g));
  return out;
}

inline std::vector<Graph> random_hosts(std::size_t count, std::size_t max_n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(1, max_n);
  std::uniform_real_distribution<double> density(0.2, 0.9);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_graph(size(rng), density(rng), rng));
  return out;
}

inline Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> order(g.num_vertices());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  return homlattice::relabel(g, order);
}

}  // namespace testing
