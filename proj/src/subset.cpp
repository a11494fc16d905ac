#include "hypergiant/subset.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypergiant {

void sample_rank_subset(std::uint64_t n, std::span<std::uint64_t> out, RngStream& rng) {
  const std::uint64_t k = out.size();
  if (k > n) throw std::invalid_argument("sample_rank_subset: k exceeds n");
  std::size_t filled = 0;
  for (std::uint64_t j = n - k; j < n; ++j) {
    const std::uint64_t candidate = rng.below(j + 1);
    const bool taken = std::find(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(filled), candidate) !=
                       out.begin() + static_cast<std::ptrdiff_t>(filled);
    out[filled++] = taken ? j : candidate;
  }
  std::sort(out.begin(), out.end());
}

std::vector<std::uint32_t> sample_k_subset(std::span<const std::uint32_t> pool, std::size_t k, RngStream& rng) {
  if (k > pool.size()) throw std::invalid_argument("sample_k_subset: k exceeds pool size");
  std::vector<std::uint64_t> ranks(k);
  sample_rank_subset(pool.size(), ranks, rng);
  std::vector<std::uint32_t> out(k);
  std::transform(ranks.begin(), ranks.end(), out.begin(), [&](std::uint64_t r) { return pool[r]; });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hypergiant
