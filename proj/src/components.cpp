#include "hypergiant/components.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace hypergiant {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1), count_(n) {
  std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
}

std::uint32_t DisjointSets::find(std::uint32_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

void DisjointSets::unite(std::uint32_t a, std::uint32_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --count_;
}

namespace {

// Star unions: the first vertex of each edge is joined to the others.
DisjointSets union_edges(const Hypergraph& h) {
  DisjointSets sets(static_cast<std::size_t>(h.N()));
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    const auto edge = h.edge(e);
    for (std::size_t j = 1; j < edge.size(); ++j) sets.unite(edge[0] - 1, edge[j] - 1);
  }
  return sets;
}

std::int64_t seed_union(DisjointSets& sets, std::int64_t k) {
  std::vector<std::uint32_t> roots;
  roots.reserve(static_cast<std::size_t>(k));
  for (std::int64_t v = 0; v < k; ++v) roots.push_back(sets.find(static_cast<std::uint32_t>(v)));
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  std::int64_t total = 0;
  for (auto r : roots) total += sets.size_of(r);
  return total;
}

void require_seed_count(const Hypergraph& h, std::int64_t k) {
  if (k < 1 || k > h.N()) throw std::invalid_argument("k must lie in [1, N]");
}

}  // namespace

ComponentSummary connected_components(const Hypergraph& h) {
  DisjointSets sets = union_edges(h);
  ComponentSummary out;
  out.sizes.reserve(sets.count());
  for (std::uint32_t v = 0; v < static_cast<std::uint32_t>(h.N()); ++v) {
    if (sets.find(v) == v) out.sizes.push_back(sets.size_of(v));
  }
  std::sort(out.sizes.begin(), out.sizes.end(), std::greater<>());
  out.count = static_cast<std::int64_t>(out.sizes.size());
  out.l1 = out.sizes.empty() ? 0 : out.sizes[0];
  out.l2 = out.sizes.size() > 1 ? out.sizes[1] : 0;
  return out;
}

std::int64_t component_of_set(const Hypergraph& h, std::int64_t k) {
  require_seed_count(h, k);
  DisjointSets sets = union_edges(h);
  return seed_union(sets, k);
}

GiantAndSeeds giant_and_seed_union(const Hypergraph& h, std::int64_t k) {
  require_seed_count(h, k);
  DisjointSets sets = union_edges(h);
  GiantAndSeeds out;
  for (std::uint32_t v = 0; v < static_cast<std::uint32_t>(h.N()); ++v) {
    if (sets.find(v) == v) out.l1 = std::max<std::int64_t>(out.l1, sets.size_of(v));
  }
  out.seed_union = seed_union(sets, k);
  return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> size_histogram(const ComponentSummary& summary) {
  std::map<std::int64_t, std::int64_t> counts;
  for (auto s : summary.sizes) ++counts[s];
  return {counts.begin(), counts.end()};
}

void write_histogram_csv(std::ostream& out, const ComponentSummary& summary) {
  out << "size,count\n";
  for (const auto& [size, count] : size_histogram(summary)) out << size << ',' << count << '\n';
}

}  // namespace hypergiant
