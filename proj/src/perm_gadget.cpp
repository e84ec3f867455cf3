#include "homlattice/perm_gadget.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>

#include "homlattice/errors.hpp"
#include "homlattice/oracle.hpp"

namespace homlattice {

GadgetTree build_gadget(const BinaryMatrix& a) {
  const auto n = a.size();
  if (n == 0) throw invalid_input("build_gadget: empty matrix");
  GadgetTree out;
  out.n = n;
  const auto total = n * n + a.count_ones() + 5 * n + 1;
  out.graph = Graph(total);
  out.roles.reserve(total);
  auto add = [&](GadgetRole role, std::size_t row, std::size_t column) {
    out.roles.push_back({role, row, column});
    return static_cast<Vertex>(out.roles.size() - 1);
  };
  out.root = add(GadgetRole::root, 0, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const auto u = add(GadgetRole::u, 0, j);
    out.graph.add_edge(out.root, u);
    Vertex above = u;
    for (std::size_t i = 0; i < n; ++i) {
      const auto v = add(GadgetRole::v, i, j);
      out.graph.add_edge(above, v);
      if (a.at(i, j)) out.graph.add_edge(v, add(GadgetRole::b, i, j));
      above = v;
    }
    const auto w = add(GadgetRole::w, 0, j);
    out.graph.add_edge(above, w);
    for (auto leaf : {GadgetRole::x, GadgetRole::y, GadgetRole::z}) out.graph.add_edge(w, add(leaf, 0, j));
  }
  if (out.roles.size() != total || !is_tree(out.graph) || out.graph.degree(out.root) != n)
    throw internal_error("build_gadget: construction is not the expected tree");
  for (Vertex x = 0; x < total; ++x)
    if (out.roles[x].role == GadgetRole::w && out.graph.degree(x) != 4)
      throw internal_error("build_gadget: w vertex without degree 4");
  return out;
}

namespace {

class TreeEmbeddingCounter {
public:
  TreeEmbeddingCounter(const Graph& t1, const Graph& t2) : t1_(t1), t2_(t2) {
    const auto n1 = t1.num_vertices();
    // Root T1 at a vertex of maximum degree; its image is the most
    // constrained choice.
    root_ = 0;
    for (Vertex v = 1; v < n1; ++v)
      if (t1.degree(v) > t1.degree(root_)) root_ = v;
    children_.assign(n1, {});
    std::vector<bool> seen(n1, false);
    std::deque<Vertex> queue{root_};
    seen[root_] = true;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex c : t1.neighbors(x))
        if (!seen[c]) {
          seen[c] = true;
          children_[x].push_back(c);
          queue.push_back(c);
        }
    }
  }

  Count run() {
    Count total = 0;
    for (Vertex y = 0; y < t2_.num_vertices(); ++y) total += mapped(root_, y, none());
    return total;
  }

private:
  Vertex none() const { return static_cast<Vertex>(t2_.num_vertices()); }

  // Embeddings of the subtree below x with x -> y and parent(x) -> parent_image.
  Count mapped(Vertex x, Vertex y, Vertex parent_image) {
    const std::size_t needed = children_[x].size() + (parent_image == none() ? 0 : 1);
    if (t2_.degree(y) < needed) return 0;
    const auto stride = static_cast<std::uint64_t>(t2_.num_vertices()) + 1;
    const std::uint64_t key = (static_cast<std::uint64_t>(x) * stride + y) * stride + parent_image;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::vector<Vertex> options;
    for (Vertex z : t2_.neighbors(y))
      if (z != parent_image) options.push_back(z);
    std::vector<bool> used(options.size(), false);
    const auto& kids = children_[x];
    std::function<Count(std::size_t)> assign = [&](std::size_t i) -> Count {
      if (i == kids.size()) return 1;
      Count sum = 0;
      for (std::size_t k = 0; k < options.size(); ++k) {
        if (used[k]) continue;
        Count below = mapped(kids[i], options[k], y);
        if (below == 0) continue;
        used[k] = true;
        sum += below * assign(i + 1);
        used[k] = false;
      }
      return sum;
    };
    Count result = assign(0);
    memo_.emplace(key, result);
    return result;
  }

  const Graph& t1_;
  const Graph& t2_;
  Vertex root_ = 0;
  std::vector<std::vector<Vertex>> children_;
  std::unordered_map<std::uint64_t, Count> memo_;
};

}  // namespace

Count count_tree_embeddings(const Graph& t1, const Graph& t2) {
  if (!is_tree(t1) || !is_tree(t2)) throw invalid_input("count_tree_embeddings: inputs must be trees");
  if (t1.num_vertices() > t2.num_vertices()) return 0;
  return TreeEmbeddingCounter(t1, t2).run();
}

Count count_pattern_subtrees(const Graph& t1, const Graph& t2) {
  const auto embeddings = count_tree_embeddings(t1, t2);
  const auto automorphisms = count_tree_embeddings(t1, t1);
  if (automorphisms == 0 || embeddings % automorphisms != 0)
    throw internal_error("count_pattern_subtrees: embeddings not divisible by automorphisms");
  return embeddings / automorphisms;
}

PermIdentity verify_perm_identity(const BinaryMatrix& a) {
  if (a.size() < 5)
    throw precondition_failed("verify_perm_identity: matrix size must be at least 5 for the root to be unique");
  PermIdentity out;
  out.permanent = oracle::permanent_ryser(a);
  const auto pattern = build_gadget(BinaryMatrix::identity(a.size()));
  const auto host = build_gadget(a);
  out.subtrees = count_pattern_subtrees(pattern.graph, host.graph);
  out.match = out.permanent == out.subtrees;
  return out;
}

}  // namespace homlattice
