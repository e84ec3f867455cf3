#include "homlattice/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "homlattice/errors.hpp"

namespace homlattice::oracle {

namespace {

constexpr std::size_t far = static_cast<std::size_t>(-1);

std::uint64_t saturating_power(std::uint64_t base, std::size_t exponent, std::uint64_t cap) {
  std::uint64_t value = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && value > cap / base) return cap + 1;
    value *= base;
  }
  return value;
}

void check_budget(std::uint64_t space, std::uint64_t budget, const char* what) {
  if (space > budget)
    throw limit_exceeded(std::string(what) + ": enumeration space of " + std::to_string(space) +
                         " exceeds the budget of " + std::to_string(budget));
}

std::vector<std::vector<std::size_t>> all_distances(const Graph& h) {
  const auto n = h.num_vertices();
  std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, far));
  for (Vertex s = 0; s < n; ++s) {
    std::deque<Vertex> queue{s};
    dist[s][s] = 0;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : h.neighbors(x))
        if (dist[s][y] == far) {
          dist[s][y] = dist[s][x] + 1;
          queue.push_back(y);
        }
    }
  }
  return dist;
}

// Pairs {u, w} that every counted map must separate.
std::vector<std::pair<Vertex, Vertex>> constraint_pairs(const Restriction& tau, const Graph& h) {
  const auto n = h.num_vertices();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  switch (tau.kind()) {
    case RestrictionKind::independent_set:
      break;
    case RestrictionKind::clique:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex w = u + 1; w < n; ++w) pairs.emplace_back(u, w);
      break;
    case RestrictionKind::locally_injective:
    case RestrictionKind::locally_injective_radius: {
      const auto r = tau.radius();
      const auto dist = all_distances(h);
      auto near = [&](Vertex a, Vertex b) { return dist[a][b] != far && dist[a][b] >= 1 && dist[a][b] <= r; };
      for (Vertex u = 0; u < n; ++u)
        for (Vertex w = u + 1; w < n; ++w)
          for (Vertex v = 0; v < n; ++v)
            if (near(u, v) && near(w, v)) {
              pairs.emplace_back(u, w);
              break;
            }
      break;
    }
    case RestrictionKind::custom: {
      const auto constraint = tau.apply(h);
      for (const auto& [u, w] : constraint.edges())
        if (u != w) pairs.emplace_back(u, w);
      break;
    }
  }
  return pairs;
}

// Depth-first over all maps V(H) -> V(G) in vertex order, rejecting a
// partial map as soon as an edge between assigned vertices is not preserved.
// accept(map) decides leaves.
Count enumerate_homs(const Graph& h, const Graph& g, const std::function<bool(const std::vector<Vertex>&)>& accept) {
  const auto n = h.num_vertices();
  std::vector<Vertex> phi(n);
  Count total = 0;
  std::function<void(Vertex)> place = [&](Vertex i) {
    if (i == n) {
      if (accept(phi)) ++total;
      return;
    }
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
      bool ok = true;
      for (Vertex j : h.neighbors(i))
        if (j <= i && !g.has_edge(j == i ? x : phi[j], x)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      phi[i] = x;
      place(i + 1);
    }
  };
  place(0);
  return total;
}

}  // namespace

Count brute_hom(const Graph& h, const Graph& g, std::uint64_t budget) {
  check_budget(saturating_power(g.num_vertices(), h.num_vertices(), budget), budget, "brute_hom");
  return enumerate_homs(h, g, [](const std::vector<Vertex>&) { return true; });
}

Count brute_restricted(const Restriction& tau, const Graph& h, const Graph& g, std::uint64_t budget) {
  check_budget(saturating_power(g.num_vertices(), h.num_vertices(), budget), budget, "brute_restricted");
  const auto n = h.num_vertices();
  switch (tau.kind()) {
    case RestrictionKind::independent_set:
      return enumerate_homs(h, g, [](const std::vector<Vertex>&) { return true; });
    case RestrictionKind::clique:
      return enumerate_homs(h, g, [](const std::vector<Vertex>& phi) {
        std::set<Vertex> image(phi.begin(), phi.end());
        return image.size() == phi.size();
      });
    case RestrictionKind::locally_injective:
    case RestrictionKind::locally_injective_radius: {
      const auto r = tau.radius();
      const auto dist = all_distances(h);
      std::vector<std::vector<Vertex>> balls(n);
      for (Vertex v = 0; v < n; ++v)
        for (Vertex u = 0; u < n; ++u)
          if (dist[v][u] != far && dist[v][u] <= r) balls[v].push_back(u);
      return enumerate_homs(h, g, [&](const std::vector<Vertex>& phi) {
        for (const auto& ball : balls) {
          std::set<Vertex> image;
          for (Vertex u : ball) image.insert(phi[u]);
          if (image.size() != ball.size()) return false;
        }
        return true;
      });
    }
    case RestrictionKind::custom: {
      const auto pairs = constraint_pairs(tau, h);
      return enumerate_homs(h, g, [&](const std::vector<Vertex>& phi) {
        return std::all_of(pairs.begin(), pairs.end(), [&](const auto& p) { return phi[p.first] != phi[p.second]; });
      });
    }
  }
  throw internal_error("brute_restricted: unhandled restriction kind");
}

Count brute_sub(const Graph& h, const Graph& g, std::uint64_t budget) {
  const auto k = h.num_vertices();
  const auto m = h.num_edges();
  if (h.has_any_loop() || g.has_any_loop()) throw invalid_input("brute_sub: graphs must be loop-free");
  if (k > g.num_vertices()) return 0;

  // Rough space estimate: C(n,k) * C(|E(G)|, m) * k!.
  long double space = 1;
  for (std::size_t i = 0; i < k; ++i) space = space * (g.num_vertices() - i) / (i + 1);
  for (std::size_t i = 0; i < m && i < g.num_edges(); ++i) space = space * (g.num_edges() - i) / (i + 1);
  for (std::size_t i = 2; i <= k; ++i) space *= i;
  if (space > static_cast<long double>(budget))
    throw limit_exceeded("brute_sub: enumeration space exceeds the budget of " + std::to_string(budget));

  const auto pattern_edges = h.edges();
  Count total = 0;
  std::vector<Vertex> chosen;
  std::function<void(Vertex)> pick_vertices = [&](Vertex start) {
    if (chosen.size() == k) {
      // Edges of G inside the chosen set, in local indices.
      std::vector<std::pair<Vertex, Vertex>> inside;
      for (Vertex a = 0; a < k; ++a)
        for (Vertex b = a + 1; b < k; ++b)
          if (g.has_edge(chosen[a], chosen[b])) inside.emplace_back(a, b);
      if (inside.size() < m) return;
      std::vector<bool> take(inside.size(), false);
      std::fill(take.begin(), take.begin() + static_cast<std::ptrdiff_t>(m), true);
      do {
        std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
        for (std::size_t e = 0; e < inside.size(); ++e)
          if (take[e]) adj[inside[e].first][inside[e].second] = adj[inside[e].second][inside[e].first] = true;
        std::vector<Vertex> perm(k);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        bool isomorphic = false;
        do {
          isomorphic = std::all_of(pattern_edges.begin(), pattern_edges.end(),
                                   [&](const Edge& e) { return adj[perm[e.first]][perm[e.second]]; });
        } while (!isomorphic && std::next_permutation(perm.begin(), perm.end()));
        if (isomorphic) ++total;
      } while (std::prev_permutation(take.begin(), take.end()));
      return;
    }
    for (Vertex v = start; v < g.num_vertices(); ++v) {
      chosen.push_back(v);
      pick_vertices(v + 1);
      chosen.pop_back();
    }
  };
  pick_vertices(0);
  return total;
}

Count brute_blockwise_restricted(const Restriction& tau, const Graph& h, const VertexPartition& sigma,
                                 const Graph& g, std::uint64_t budget) {
  const auto n = h.num_vertices();
  if (sigma.num_vertices() != n) throw invalid_input("brute_blockwise_restricted: partition size mismatch");
  const auto pairs = constraint_pairs(tau, h);

  // sigma must have constraint-connected blocks.
  for (const auto& block : sigma.blocks()) {
    std::set<Vertex> members(block.begin(), block.end()), reached{block.front()};
    std::vector<Vertex> stack{block.front()};
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (const auto& [u, w] : pairs) {
        const Vertex other = u == x ? w : (w == x ? u : x);
        if (other != x && members.count(other) && reached.insert(other).second) stack.push_back(other);
      }
    }
    if (reached.size() != members.size())
      throw invalid_input("brute_blockwise_restricted: partition is not a flat of the constraint matroid");
  }

  const auto blocks = sigma.num_blocks();
  check_budget(saturating_power(g.num_vertices(), blocks, budget), budget, "brute_blockwise_restricted");
  std::vector<Vertex> psi(blocks);
  Count total = 0;
  std::function<void(std::size_t)> place = [&](std::size_t b) {
    if (b == blocks) {
      for (const auto& [u, v] : h.edges())
        if (!g.has_edge(psi[sigma.block_of(u)], psi[sigma.block_of(v)])) return;
      for (const auto& [u, w] : pairs) {
        const auto bu = sigma.block_of(u), bw = sigma.block_of(w);
        if (bu != bw && psi[bu] == psi[bw]) return;
      }
      ++total;
      return;
    }
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
      psi[b] = x;
      place(b + 1);
    }
  };
  place(0);
  return total;
}

Count permanent_ryser(const BinaryMatrix& a) {
  const auto n = a.size();
  if (n > 20) throw limit_exceeded("permanent_ryser: n > 20");
  if (n == 0) return 1;
  Integer total = 0;
  std::vector<long> row_sums(n, 0);
  // Gray code over column subsets; row_sums tracks sum_{j in S} a_ij.
  std::uint32_t subset = 0;
  for (std::uint32_t step = 1; step < (std::uint32_t{1} << n); ++step) {
    const auto flip = static_cast<std::size_t>(__builtin_ctz(step));
    subset ^= std::uint32_t{1} << flip;
    const long delta = (subset >> flip) & 1u ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i)
      if (a.at(i, flip)) row_sums[i] += delta;
    Integer product = 1;
    for (std::size_t i = 0; i < n && product != 0; ++i) product *= row_sums[i];
    const bool negative = (n - static_cast<std::size_t>(__builtin_popcount(subset))) % 2 == 1;
    if (negative)
      total -= product;
    else
      total += product;
  }
  return total;
}

Count permanent_direct(const BinaryMatrix& a) {
  const auto n = a.size();
  if (n > 7) throw limit_exceeded("permanent_direct: n > 7");
  std::vector<std::size_t> pi(n);
  std::iota(pi.begin(), pi.end(), std::size_t{0});
  Count total = 0;
  do {
    bool all = true;
    for (std::size_t i = 0; i < n && all; ++i) all = a.at(i, pi[i]);
    if (all) ++total;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return total;
}

}  // namespace homlattice::oracle
