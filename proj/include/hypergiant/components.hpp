#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "hypergiant/hypergraph.hpp"

namespace hypergiant {

/// Union-find with path halving and union by size over ids 0..n-1.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::uint32_t find(std::uint32_t x);
  void unite(std::uint32_t a, std::uint32_t b);
  std::uint32_t size_of(std::uint32_t x) { return size_[find(x)]; }
  std::size_t count() const { return count_; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::size_t count_;
};

struct ComponentSummary {
  std::vector<std::int64_t> sizes;  // descending
  std::int64_t l1 = 0;
  std::int64_t l2 = 0;
  std::int64_t count = 0;
};

ComponentSummary connected_components(const Hypergraph& h);

/// |C_{<=k}|: vertices in the union of the components of vertices 1..k.
std::int64_t component_of_set(const Hypergraph& h, std::int64_t k);

/// |C_max| and |C_{<=k}| from a single union-find pass.
struct GiantAndSeeds {
  std::int64_t l1 = 0;
  std::int64_t seed_union = 0;
};
GiantAndSeeds giant_and_seed_union(const Hypergraph& h, std::int64_t k);

/// (size, count) pairs, ascending by size.
std::vector<std::pair<std::int64_t, std::int64_t>> size_histogram(const ComponentSummary& summary);

/// CSV with header `size,count`.
void write_histogram_csv(std::ostream& out, const ComponentSummary& summary);

}  // namespace hypergiant
