#include "homlattice/matroid_lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "homlattice/errors.hpp"
#include "homlattice/limits.hpp"

namespace homlattice {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& f) {
  std::vector<Mask> rows(f.num_vertices(), 0);
  for (Vertex u = 0; u < f.num_vertices(); ++u)
    for (Vertex v : f.neighbors(u)) rows[u] |= Mask{1} << v;
  return rows;
}

bool connected_in(const std::vector<Mask>& rows, Mask block) {
  if (block == 0) return false;
  Mask reached = block & -block;
  Mask frontier = reached;
  while (frontier) {
    const auto v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const Mask fresh = rows[v] & block & ~reached;
    reached |= fresh;
    frontier |= fresh;
  }
  return reached == block;
}

// Calls visit(labels, block_count) for each restricted growth string of
// length n.
template <typename Visit>
void for_each_rgs(std::size_t n, Visit&& visit) {
  if (n == 0) {
    std::vector<std::size_t> empty;
    visit(empty, std::size_t{0});
    return;
  }
  std::vector<std::size_t> labels(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);  // max over labels[0..i]
  while (true) {
    visit(labels, prefix_max[n - 1] + 1);
    // Advance to the next RGS in lexicographic order.
    std::size_t i = n - 1;
    while (i > 0 && labels[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++labels[i];
    prefix_max[i] = std::max(prefix_max[i - 1], labels[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      labels[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::uint64_t pack_masks(std::vector<Mask> blocks) {
  std::sort(blocks.begin(), blocks.end(),
            [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
  std::uint64_t key = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (Mask m = blocks[b]; m; m &= m - 1)
      key |= static_cast<std::uint64_t>(b) << (4 * std::countr_zero(m));
  return key;
}

// Connected partitions of single blocks, cached by block mask.
class IdealEnumerator {
public:
  explicit IdealEnumerator(const Graph& f) : rows_(adjacency_masks(f)) {}

  const std::vector<std::vector<Mask>>& split(Mask block) {
    auto it = cache_.find(block);
    if (it != cache_.end()) return it->second;
    std::vector<Vertex> members;
    for (Mask m = block; m; m &= m - 1) members.push_back(static_cast<Vertex>(std::countr_zero(m)));
    std::vector<std::vector<Mask>> out;
    for_each_rgs(members.size(), [&](const std::vector<std::size_t>& labels, std::size_t count) {
      std::vector<Mask> parts(count, 0);
      for (std::size_t i = 0; i < members.size(); ++i) parts[labels[i]] |= Mask{1} << members[i];
      for (Mask p : parts)
        if (!connected_in(rows_, p)) return;
      out.push_back(std::move(parts));
    });
    return cache_.emplace(block, std::move(out)).first->second;
  }

  template <typename Visit>
  void for_each_below(const VertexPartition& upper, Visit&& visit) {
    std::vector<const std::vector<std::vector<Mask>>*> options;
    for (const auto& block : upper.blocks()) {
      Mask m = 0;
      for (Vertex v : block) m |= Mask{1} << v;
      options.push_back(&split(m));
    }
    std::vector<Mask> current;
    recurse(options, 0, current, visit);
  }

private:
  template <typename Visit>
  void recurse(const std::vector<const std::vector<std::vector<Mask>>*>& options, std::size_t i,
               std::vector<Mask>& current, Visit& visit) {
    if (i == options.size()) {
      visit(pack_masks(current));
      return;
    }
    for (const auto& parts : *options[i]) {
      const auto mark = current.size();
      current.insert(current.end(), parts.begin(), parts.end());
      recurse(options, i + 1, current, visit);
      current.resize(mark);
    }
  }

  std::vector<Mask> rows_;
  std::map<Mask, std::vector<std::vector<Mask>>> cache_;
};

}  // namespace

bool order_leq(const Flat& lower, const Flat& upper) {
  if (lower.partition.num_vertices() != upper.partition.num_vertices())
    throw invalid_input("order_leq: flats over different vertex sets");
  return lower.partition.refines(upper.partition);
}

bool is_flat(const Graph& constraint, const VertexPartition& partition) {
  if (partition.num_vertices() != constraint.num_vertices() || constraint.has_any_loop()) return false;
  if (constraint.num_vertices() > 32) throw limit_exceeded("is_flat: more than 32 vertices");
  const auto rows = adjacency_masks(constraint);
  for (const auto& block : partition.blocks()) {
    Mask m = 0;
    for (Vertex v : block) m |= Mask{1} << v;
    if (!connected_in(rows, m)) return false;
  }
  return true;
}

FlatLattice::FlatLattice(Graph constraint, std::vector<Flat> flats)
    : constraint_(std::move(constraint)), flats_(std::move(flats)) {
  for (std::size_t i = 0; i < flats_.size(); ++i) index_.emplace(flats_[i].partition.packed(), i);
}

std::size_t FlatLattice::index_of(const VertexPartition& partition) const {
  if (partition.num_vertices() != constraint_.num_vertices()) return flats_.size();
  auto it = index_.find(partition.packed());
  return it == index_.end() ? flats_.size() : it->second;
}

std::vector<std::size_t> FlatLattice::ideal(std::size_t i) const {
  IdealEnumerator enumerator(constraint_);
  std::vector<std::size_t> out;
  enumerator.for_each_below(flats_.at(i).partition, [&](std::uint64_t key) {
    auto it = index_.find(key);
    if (it == index_.end()) throw internal_error("ideal: refinement is not a flat");
    out.push_back(it->second);
  });
  std::sort(out.begin(), out.end());
  return out;
}

FlatLattice enumerate_flats(const Graph& constraint) {
  const auto n = constraint.num_vertices();
  check_pattern_size(n, "enumerate_flats");
  if (constraint.has_any_loop()) throw invalid_input("enumerate_flats: constraint graph has selfloops");
  const auto rows = adjacency_masks(constraint);

  std::vector<Flat> flats;
  for_each_rgs(n, [&](const std::vector<std::size_t>& labels, std::size_t count) {
    std::vector<Mask> blocks(count, 0);
    for (std::size_t v = 0; v < n; ++v) blocks[labels[v]] |= Mask{1} << v;
    for (Mask b : blocks)
      if (!connected_in(rows, b)) return;
    flats.push_back(Flat{VertexPartition::from_labels(labels), n - count});
  });
  std::stable_sort(flats.begin(), flats.end(),
                   [](const Flat& a, const Flat& b) { return a.rank < b.rank; });
  return FlatLattice(constraint, std::move(flats));
}

FlatLattice mobius_of_lattice(FlatLattice lattice) {
  const auto size = lattice.flats_.size();
  std::vector<Integer> mu(size);
  IdealEnumerator enumerator(lattice.constraint_);
  for (std::size_t r = 0; r < size; ++r) {
    if (lattice.flats_[r].rank == 0) {
      mu[r] = 1;
      continue;
    }
    Integer sum = 0;
    enumerator.for_each_below(lattice.flats_[r].partition, [&](std::uint64_t key) {
      const auto s = lattice.index_.at(key);
      if (s != r) {
        if (s > r) throw internal_error("mobius: lattice not in rank order");
        sum += mu[s];
      }
    });
    mu[r] = -sum;
  }
  lattice.mobius_ = std::move(mu);
  return lattice;
}

bool check_rota_sign(const FlatLattice& lattice) {
  if (!lattice.has_mobius()) throw precondition_failed("check_rota_sign: mobius not computed");
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& mu = lattice.mobius()[i];
    if (mu == 0) return false;
    const bool negative = mu < 0;
    if (negative != (lattice[i].rank % 2 == 1)) return false;
  }
  return true;
}

FlatLattice flat_lattice(const Graph& constraint) {
  return mobius_of_lattice(enumerate_flats(constraint));
}

}  // namespace homlattice
