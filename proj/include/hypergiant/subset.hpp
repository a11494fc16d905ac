#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hypergiant/rng.hpp"

namespace hypergiant {

/// Floyd's algorithm: writes a uniform k-subset of {0, ..., n-1} into out
/// (out.size() == k), sorted ascending. Intended for small k.
void sample_rank_subset(std::uint64_t n, std::span<std::uint64_t> out, RngStream& rng);

/// Uniform k-element subset of pool, returned sorted ascending.
/// Throws std::invalid_argument when k > pool.size().
std::vector<std::uint32_t> sample_k_subset(std::span<const std::uint32_t> pool, std::size_t k, RngStream& rng);

}  // namespace hypergiant
