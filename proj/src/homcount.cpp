#include "homlattice/homcount.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>

#include "homlattice/errors.hpp"
#include "homlattice/limits.hpp"

namespace homlattice {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& node : nodes) w = std::max(w, static_cast<int>(node.bag.size()) - 1);
  return w;
}

bool TreeDecomposition::is_nice() const {
  if (nodes.empty() || !nodes[root].bag.empty()) return false;
  for (const auto& node : nodes) {
    switch (node.kind) {
      case NodeKind::leaf:
        if (!node.children.empty() || !node.bag.empty()) return false;
        break;
      case NodeKind::introduce:
      case NodeKind::forget: {
        if (node.children.size() != 1) return false;
        const auto& child = nodes[node.children.front()].bag;
        const auto& big = node.kind == NodeKind::introduce ? node.bag : child;
        const auto& small = node.kind == NodeKind::introduce ? child : node.bag;
        if (big.size() != small.size() + 1) return false;
        if (!std::binary_search(big.begin(), big.end(), node.vertex)) return false;
        if (std::binary_search(small.begin(), small.end(), node.vertex)) return false;
        if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) return false;
        break;
      }
      case NodeKind::join:
        if (node.children.size() != 2) return false;
        for (auto c : node.children)
          if (nodes[c].bag != node.bag) return false;
        break;
      case NodeKind::general:
        return false;
    }
  }
  return true;
}

bool is_valid_decomposition(const Graph& h, const TreeDecomposition& td) {
  const auto n = h.num_vertices();
  if (td.nodes.empty()) return n == 0;
  if (td.root >= td.nodes.size()) return false;

  // Tree shape: every node reached exactly once from the root.
  std::vector<std::size_t> parent(td.nodes.size(), td.nodes.size());
  std::vector<bool> reached(td.nodes.size(), false);
  std::vector<std::size_t> stack{td.root};
  reached[td.root] = true;
  std::size_t visited = 0;
  while (!stack.empty()) {
    auto t = stack.back();
    stack.pop_back();
    ++visited;
    for (auto c : td.nodes[t].children) {
      if (c >= td.nodes.size() || reached[c]) return false;
      reached[c] = true;
      parent[c] = t;
      stack.push_back(c);
    }
  }
  if (visited != td.nodes.size()) return false;

  std::vector<std::size_t> occurrences(n, 0), linked(n, 0);
  for (std::size_t t = 0; t < td.nodes.size(); ++t) {
    const auto& bag = td.nodes[t].bag;
    if (!std::is_sorted(bag.begin(), bag.end()) ||
        std::adjacent_find(bag.begin(), bag.end()) != bag.end())
      return false;
    for (Vertex v : bag) {
      if (v >= n) return false;
      ++occurrences[v];
      if (parent[t] != td.nodes.size()) {
        const auto& up = td.nodes[parent[t]].bag;
        if (std::binary_search(up.begin(), up.end(), v)) ++linked[v];
      }
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (occurrences[v] == 0 || linked[v] + 1 != occurrences[v]) return false;

  for (const auto& [u, v] : h.edges()) {
    if (u == v) continue;
    bool covered = false;
    for (const auto& node : td.nodes)
      if (std::binary_search(node.bag.begin(), node.bag.end(), u) &&
          std::binary_search(node.bag.begin(), node.bag.end(), v)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

using Mask = std::uint32_t;

// Vertices outside done and other than v reachable from v through done.
Mask elimination_neighbourhood(const std::vector<Mask>& rows, Mask done, Vertex v) {
  Mask reached = Mask{1} << v;
  Mask frontier = reached;
  Mask out = 0;
  while (frontier) {
    const auto x = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const Mask fresh = rows[x] & ~reached;
    reached |= fresh;
    out |= fresh & ~done;
    frontier |= fresh & done;
  }
  return out;
}

}  // namespace

TreewidthResult treewidth_exact(const Graph& h) {
  const auto n = h.num_vertices();
  check_pattern_size(n, "treewidth_exact");
  TreewidthResult result;
  if (n == 0) {
    result.decomposition.nodes.push_back(TreeNode{});
    return result;
  }

  std::vector<Mask> rows(n, 0);
  for (const auto& [u, v] : h.edges())
    if (u != v) {
      rows[u] |= Mask{1} << v;
      rows[v] |= Mask{1} << u;
    }

  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<int> best(std::size_t{full} + 1, 0);
  best[0] = -1;
  auto step_cost = [&](Mask set, Vertex v) {
    const Mask before = set & ~(Mask{1} << v);
    return std::max(best[before], std::popcount(elimination_neighbourhood(rows, before, v)));
  };
  for (Mask set = 1; set <= full && set != 0; ++set) {
    int value = static_cast<int>(n);
    for (Mask m = set; m; m &= m - 1)
      value = std::min(value, step_cost(set, static_cast<Vertex>(std::countr_zero(m))));
    best[set] = value;
    if (set == full) break;
  }
  result.width = best[full];

  // Recover the order back to front, preferring the least vertex.
  std::vector<Vertex> order(n);
  Mask remaining = full;
  for (std::size_t pos = n; pos-- > 0;) {
    for (Mask m = remaining; m; m &= m - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(m));
      if (step_cost(remaining, v) == best[remaining]) {
        order[pos] = v;
        remaining &= ~(Mask{1} << v);
        break;
      }
    }
  }
  result.elimination_order = order;

  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  auto& td = result.decomposition;
  td.nodes.resize(n);
  std::vector<std::size_t> roots;
  Mask done = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    const Mask later = elimination_neighbourhood(rows, done, v);
    auto& node = td.nodes[i];
    node.bag.push_back(v);
    std::size_t parent = n;
    for (Mask m = later; m; m &= m - 1) {
      const auto u = static_cast<Vertex>(std::countr_zero(m));
      node.bag.push_back(u);
      parent = std::min(parent, position[u]);
    }
    std::sort(node.bag.begin(), node.bag.end());
    if (parent == n)
      roots.push_back(i);
    else
      td.nodes[parent].children.push_back(i);
    done |= Mask{1} << v;
  }
  // One root per component; chain them under the last.
  td.root = roots.back();
  for (std::size_t r = 0; r + 1 < roots.size(); ++r) td.nodes[td.root].children.push_back(roots[r]);

  if (td.width() != result.width || !is_valid_decomposition(h, td))
    throw internal_error("treewidth_exact: decomposition does not witness the width");
  return result;
}

// ---------------------------------------------------------------------------

namespace {

class NiceBuilder {
public:
  NiceBuilder(const TreeDecomposition& td, const Graph* pattern) : td_(td), pattern_(pattern) {}

  TreeDecomposition build() {
    auto top = convert(td_.root);
    // Forget the root bag entirely.
    top = transition(top, {});
    out_.root = top;
    return std::move(out_);
  }

private:
  std::size_t add(TreeNode node) {
    out_.nodes.push_back(std::move(node));
    return out_.nodes.size() - 1;
  }

  // Chain of forgets then introduces taking node `from` to bag `target`.
  std::size_t transition(std::size_t from, const std::vector<Vertex>& target) {
    std::vector<Vertex> current = out_.nodes[from].bag;
    for (Vertex v : std::vector<Vertex>(current)) {
      if (std::binary_search(target.begin(), target.end(), v)) continue;
      current.erase(std::find(current.begin(), current.end(), v));
      from = add(TreeNode{current, {from}, NodeKind::forget, v});
    }
    std::vector<Vertex> pending;
    std::set_difference(target.begin(), target.end(), current.begin(), current.end(),
                        std::back_inserter(pending));
    while (!pending.empty()) {
      auto pick = pending.begin();
      if (pattern_) {
        std::size_t best = 0;
        for (auto it = pending.begin(); it != pending.end(); ++it) {
          std::size_t links = 0;
          for (Vertex u : current)
            if (pattern_->has_edge(*it, u)) ++links;
          if (links > best) {
            best = links;
            pick = it;
          }
        }
      }
      const Vertex v = *pick;
      pending.erase(pick);
      current.insert(std::lower_bound(current.begin(), current.end(), v), v);
      from = add(TreeNode{current, {from}, NodeKind::introduce, v});
    }
    return from;
  }

  std::size_t convert(std::size_t t) {
    const auto& source = td_.nodes[t];
    std::vector<Vertex> bag = source.bag;
    std::sort(bag.begin(), bag.end());
    std::vector<std::size_t> branches;
    for (auto c : source.children) branches.push_back(transition(convert(c), bag));
    if (branches.empty()) branches.push_back(transition(add(TreeNode{{}, {}, NodeKind::leaf, 0}), bag));
    while (branches.size() > 1) {
      const auto right = branches.back();
      branches.pop_back();
      const auto left = branches.back();
      branches.back() = add(TreeNode{bag, {left, right}, NodeKind::join, 0});
    }
    return branches.front();
  }

  const TreeDecomposition& td_;
  const Graph* pattern_;
  TreeDecomposition out_;
};

struct KeyHash {
  std::size_t operator()(const std::vector<Vertex>& key) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Vertex v : key) {
      h ^= v;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

using Table = std::unordered_map<std::vector<Vertex>, Count, KeyHash>;

class HomDp {
public:
  HomDp(const Graph& pattern, const Graph& host, const TreeDecomposition& nice)
      : pattern_(pattern), host_(host), td_(nice) {}

  Count run() {
    auto table = solve(td_.root);
    auto it = table.find({});
    return it == table.end() ? Count{0} : it->second;
  }

private:
  Table solve(std::size_t t) {
    const auto& node = td_.nodes[t];
    switch (node.kind) {
      case NodeKind::leaf: {
        Table table;
        table.emplace(std::vector<Vertex>{}, Count{1});
        return table;
      }
      case NodeKind::introduce:
        return introduce(node, solve(node.children.front()));
      case NodeKind::forget:
        return forget(node, solve(node.children.front()));
      case NodeKind::join: {
        auto left = solve(node.children[0]);
        auto right = solve(node.children[1]);
        if (left.size() > right.size()) std::swap(left, right);
        Table table;
        for (auto& [key, count] : left) {
          auto it = right.find(key);
          if (it != right.end()) table.emplace(key, count * it->second);
        }
        return table;
      }
      case NodeKind::general:
        break;
    }
    throw internal_error("homomorphism DP reached a non-nice node");
  }

  Table introduce(const TreeNode& node, Table child) {
    const Vertex v = node.vertex;
    const auto slot = static_cast<std::size_t>(
        std::lower_bound(node.bag.begin(), node.bag.end(), v) - node.bag.begin());
    // Positions in the child key of bag vertices adjacent to v.
    std::vector<std::size_t> linked;
    for (std::size_t i = 0, j = 0; i < node.bag.size(); ++i) {
      if (node.bag[i] == v) continue;
      if (pattern_.has_edge(node.bag[i], v)) linked.push_back(j);
      ++j;
    }
    Table table;
    std::vector<Vertex> key;
    for (auto& [assignment, count] : child) {
      auto extend = [&](Vertex image) {
        key.assign(assignment.begin(), assignment.end());
        key.insert(key.begin() + static_cast<std::ptrdiff_t>(slot), image);
        table.emplace(key, count);
      };
      if (linked.empty()) {
        for (Vertex x = 0; x < host_.num_vertices(); ++x) extend(x);
        continue;
      }
      std::size_t anchor = linked.front();
      for (auto p : linked)
        if (host_.degree(assignment[p]) < host_.degree(assignment[anchor])) anchor = p;
      for (Vertex x : host_.neighbors(assignment[anchor])) {
        bool ok = true;
        for (auto p : linked)
          if (p != anchor && !host_.has_edge(assignment[p], x)) {
            ok = false;
            break;
          }
        if (ok) extend(x);
      }
    }
    return table;
  }

  Table forget(const TreeNode& node, Table child) {
    const auto& child_bag = td_.nodes[node.children.front()].bag;
    const auto slot = static_cast<std::size_t>(
        std::lower_bound(child_bag.begin(), child_bag.end(), node.vertex) - child_bag.begin());
    Table table;
    std::vector<Vertex> key;
    for (auto& [assignment, count] : child) {
      key.assign(assignment.begin(), assignment.end());
      key.erase(key.begin() + static_cast<std::ptrdiff_t>(slot));
      table[key] += count;
    }
    return table;
  }

  const Graph& pattern_;
  const Graph& host_;
  const TreeDecomposition& td_;
};

}  // namespace

TreeDecomposition make_nice(const TreeDecomposition& td, const Graph* pattern) {
  if (td.nodes.empty() || td.root >= td.nodes.size())
    throw invalid_input("make_nice: empty or rootless decomposition");
  if (pattern && !is_valid_decomposition(*pattern, td))
    throw invalid_input("make_nice: invalid tree decomposition");
  return NiceBuilder(td, pattern).build();
}

Count count_homomorphisms(const Graph& pattern, const Graph& host, const TreeDecomposition& td) {
  if (pattern.has_any_loop()) throw invalid_input("count_homomorphisms: pattern has selfloops");
  if (host.has_any_loop()) throw invalid_input("count_homomorphisms: host has selfloops");
  if (!is_valid_decomposition(pattern, td))
    throw invalid_input("count_homomorphisms: invalid tree decomposition");
  if (pattern.num_vertices() == 0) return 1;
  if (td.is_nice()) return HomDp(pattern, host, td).run();
  const auto nice = make_nice(td, &pattern);
  return HomDp(pattern, host, nice).run();
}

Count count_homomorphisms(const Graph& pattern, const Graph& host) {
  if (pattern.has_any_loop()) throw invalid_input("count_homomorphisms: pattern has selfloops");
  if (host.has_any_loop()) throw invalid_input("count_homomorphisms: host has selfloops");
  const auto components = connected_components(pattern);
  std::vector<std::vector<Vertex>> members(components.count);
  for (Vertex v = 0; v < pattern.num_vertices(); ++v) members[components.label[v]].push_back(v);
  Count total = 1;
  for (const auto& part : members) {
    const auto piece = induced_subgraph(pattern, part).with_selfloops_allowed(false);
    const auto tw = treewidth_exact(piece);
    const auto nice = make_nice(tw.decomposition, &piece);
    total *= HomDp(piece, host, nice).run();
    if (total == 0) break;
  }
  return total;
}

}  // namespace homlattice
