#include <doctest.h>

#include <chrono>
#include <cmath>

#include "homlattice/errors.hpp"
#include "homlattice/homcount.hpp"
#include "homlattice/oracle.hpp"
#include "support.hpp"

using namespace homlattice;
using testing::make;

namespace {

TreeDecomposition single_bag(const Graph& h) {
  TreeDecomposition td;
  TreeNode node;
  for (Vertex v = 0; v < h.num_vertices(); ++v) node.bag.push_back(v);
  td.nodes.push_back(node);
  return td;
}

// Decomposition from an arbitrary elimination order: bag of v is v plus its
// later neighbours in the fill-in graph, parent is the earliest of those.
TreeDecomposition from_order(const Graph& h, const std::vector<Vertex>& order) {
  const auto n = h.num_vertices();
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<std::set<Vertex>> adj(n);
  for (auto [u, v] : h.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  TreeDecomposition td;
  td.nodes.resize(n);
  std::vector<bool> has_parent(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    std::vector<Vertex> later;
    for (Vertex w : adj[v])
      if (position[w] > i) later.push_back(w);
    for (Vertex a : later)
      for (Vertex b : later)
        if (a != b) adj[a].insert(b);
    auto& node = td.nodes[i];
    node.bag = later;
    node.bag.push_back(v);
    std::sort(node.bag.begin(), node.bag.end());
    if (!later.empty()) {
      std::size_t parent = n;
      for (Vertex w : later) parent = std::min(parent, position[w]);
      td.nodes[parent].children.push_back(i);
      has_parent[i] = true;
    }
  }
  // Join the roots of separate components into one tree.
  td.root = n - 1;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!has_parent[i]) td.nodes[n - 1].children.push_back(i);
  return td;
}

}  // namespace

TEST_CASE("treewidth examples") {
  CHECK(treewidth_exact(generators::path(2)).width == 1);
  CHECK(treewidth_exact(generators::star(6)).width == 1);
  CHECK(treewidth_exact(generators::complete(4)).width == 3);
  CHECK(treewidth_exact(generators::cycle(5)).width == 2);
  CHECK(treewidth_exact(generators::edgeless(4)).width == 0);
  CHECK(treewidth_exact(Graph(0)).width == -1);
  CHECK(treewidth_exact(generators::complete_bipartite(3, 3)).width == 3);
  CHECK(treewidth_exact(generators::windmill(3)).width == 2);
}

TEST_CASE("treewidth is at most the width of any elimination order") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const auto h = testing::random_graph(2 + trial % 7, 0.45, rng);
    const auto best = treewidth_exact(h);
    CHECK(is_valid_decomposition(h, best.decomposition));
    CHECK(best.decomposition.width() == best.width);
    std::vector<Vertex> order(h.num_vertices());
    std::iota(order.begin(), order.end(), Vertex{0});
    int minimum = static_cast<int>(h.num_vertices());
    do {
      const auto td = from_order(h, order);
      REQUIRE(is_valid_decomposition(h, td));
      minimum = std::min(minimum, td.width());
    } while (h.num_vertices() <= 6 && std::next_permutation(order.begin(), order.end()));
    if (h.num_vertices() <= 6) CHECK(best.width == minimum);
    else CHECK(best.width <= minimum);
  }
}

TEST_CASE("decomposition validity") {
  const auto p3 = generators::path(3);
  auto td = single_bag(p3);
  CHECK(is_valid_decomposition(p3, td));
  td.nodes[0].bag = {0, 1};
  CHECK_FALSE(is_valid_decomposition(p3, td));

  // Vertex 1 occurs in two bags that are not connected through it.
  TreeDecomposition broken;
  broken.nodes = {TreeNode{{0, 1}, {1}}, TreeNode{{0, 2}, {2}}, TreeNode{{1, 2}, {}}};
  CHECK_FALSE(is_valid_decomposition(generators::cycle(3), broken));
}

TEST_CASE("nice decompositions") {
  const auto k3 = generators::complete(3);
  const auto nice = make_nice(single_bag(k3), &k3);
  CHECK(nice.is_nice());
  CHECK(is_valid_decomposition(k3, nice));
  CHECK(nice.width() == 2);
  std::size_t introduces = 0, joins = 0;
  for (const auto& node : nice.nodes) {
    introduces += node.kind == NodeKind::introduce;
    joins += node.kind == NodeKind::join;
  }
  CHECK(introduces == 3);
  CHECK(joins == 0);

  const auto p4 = generators::path(4);
  const auto path_td = make_nice(treewidth_exact(p4).decomposition);
  CHECK(path_td.is_nice());
  CHECK(path_td.width() == 1);

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const auto h = testing::random_graph(1 + trial % 9, 0.4, rng);
    const auto td = treewidth_exact(h).decomposition;
    const auto n = make_nice(td, &h);
    CHECK(n.is_nice());
    CHECK(is_valid_decomposition(h, n));
    CHECK(n.width() == td.width());
    CHECK(n.nodes[n.root].bag.empty());
  }
}

TEST_CASE("homomorphism count examples") {
  CHECK(count_homomorphisms(generators::complete(1), generators::cycle(7)) == 7);
  CHECK(count_homomorphisms(generators::complete(2), generators::complete(3)) == 6);
  CHECK(count_homomorphisms(generators::path(3), generators::complete(3)) == 12);
  CHECK(count_homomorphisms(generators::cycle(4), generators::complete(3)) == 18);
  CHECK(count_homomorphisms(generators::complete(3), generators::complete_bipartite(3, 3)) == 0);
  CHECK(count_homomorphisms(Graph(0), generators::complete(3)) == 1);
  CHECK(count_homomorphisms(generators::complete(2), Graph(0)) == 0);
}

TEST_CASE("dynamic programming agrees with brute force") {
  std::mt19937_64 rng(47);
  const auto hosts = testing::random_hosts(30, 7, rng);
  for (const auto& h : testing::all_unlabelled_upto(4))
    for (const auto& g : hosts) CHECK(count_homomorphisms(h, g) == oracle::brute_hom(h, g));
  for (int trial = 0; trial < 40; ++trial) {
    const auto h = testing::random_graph(6, 0.5, rng);
    const auto g = testing::random_graph(6, 0.6, rng);
    CHECK(count_homomorphisms(h, g) == oracle::brute_hom(h, g));
  }
}

TEST_CASE("counts do not depend on the decomposition") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const auto h = testing::random_graph(2 + trial % 5, 0.5, rng);
    const auto g = testing::random_graph(7, 0.5, rng);
    std::vector<Vertex> order(h.num_vertices());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::shuffle(order.begin(), order.end(), rng);
    const auto expected = count_homomorphisms(h, g, treewidth_exact(h).decomposition);
    CHECK(count_homomorphisms(h, g, single_bag(h)) == expected);
    CHECK(count_homomorphisms(h, g, from_order(h, order)) == expected);
    CHECK(count_homomorphisms(h, g) == expected);
  }
}

TEST_CASE("counts multiply over disjoint unions") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = testing::random_graph(1 + trial % 4, 0.6, rng);
    const auto b = testing::random_graph(1 + trial % 3, 0.6, rng);
    const auto g = testing::random_graph(8, 0.5, rng);
    CHECK(count_homomorphisms(disjoint_union(a, b), g) == count_homomorphisms(a, g) * count_homomorphisms(b, g));
  }
}

TEST_CASE("adding host edges never lowers the count") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = testing::random_graph(4, 0.6, rng);
    auto g = Graph(8);
    Count previous = count_homomorphisms(h, g);
    for (auto [u, v] : testing::all_pairs(8)) {
      if (!std::bernoulli_distribution(0.4)(rng)) continue;
      g.add_edge(u, v);
      const auto now = count_homomorphisms(h, g);
      CHECK(now >= previous);
      previous = now;
    }
  }
}

TEST_CASE("counts exceed 64 bits exactly") {
  // K_1 components: n^k maps.
  const auto g = generators::complete(1000);
  Count expected = 1;
  for (int i = 0; i < 8; ++i) expected *= 1000;
  CHECK(count_homomorphisms(generators::edgeless(8), g) == expected);
  const auto h = generators::path(12);
  Count walks = 1000;
  for (int i = 0; i < 11; ++i) walks *= 999;
  CHECK(count_homomorphisms(h, g) == walks);
}

TEST_CASE("loops and bad decompositions are rejected") {
  Graph looped(2, true);
  looped.add_edge(0, 0);
  CHECK_THROWS_AS(count_homomorphisms(looped, generators::complete(3)), invalid_input);
  const auto p3 = generators::path(3);
  auto td = single_bag(p3);
  td.nodes[0].bag = {0, 1};
  CHECK_THROWS_AS(count_homomorphisms(p3, generators::complete(3), td), invalid_input);
  CHECK_THROWS_AS(count_homomorphisms(generators::complete(2), looped), invalid_input);
}

TEST_CASE("width-one pattern scales at most quadratically") {
  std::mt19937_64 rng(67);
  const auto pattern = generators::path(6);
  auto time_on = [&](std::size_t n) {
    const auto host = testing::random_sparse(n, 5 * n, rng);
    double best = 1e9;
    for (int rep = 0; rep < 3; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      (void)count_homomorphisms(pattern, host);
      best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    return best;
  };
  const double slope = std::log2(time_on(8000) / time_on(4000));
  MESSAGE("log-log slope " << slope);
  CHECK(slope <= 2.5);
}
