#include "hypergiant/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "hypergiant/binomial.hpp"
#include "hypergiant/combinatorics.hpp"
#include "hypergiant/subset.hpp"

namespace hypergiant {

Hypergraph::Hypergraph(std::int64_t N, int d, std::vector<Vertex> flat_edges, std::uint64_t seed)
    : N_(N), d_(d), seed_(seed) {
  if (d < 2) throw std::invalid_argument("hypergraph: d must be >= 2");
  if (N < d) throw std::invalid_argument("hypergraph: N must be >= d");
  if (N > static_cast<std::int64_t>(UINT32_MAX) - 1) throw std::invalid_argument("hypergraph: N exceeds 32-bit ids");
  const auto width = static_cast<std::size_t>(d);
  if (flat_edges.size() % width != 0) throw std::invalid_argument("hypergraph: edge list length not a multiple of d");
  const std::size_t m = flat_edges.size() / width;
  for (std::size_t e = 0; e < m; ++e) {
    const Vertex* row = flat_edges.data() + e * width;
    for (std::size_t j = 0; j < width; ++j) {
      if (row[j] < 1 || row[j] > static_cast<std::uint64_t>(N)) {
        throw std::invalid_argument("hypergraph: edge " + std::to_string(e) + " has vertex out of [1, N]");
      }
      if (j > 0 && row[j] <= row[j - 1]) {
        throw std::invalid_argument("hypergraph: edge " + std::to_string(e) + " is not strictly increasing");
      }
    }
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto row_less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(flat_edges.begin() + static_cast<std::ptrdiff_t>(a * width),
                                        flat_edges.begin() + static_cast<std::ptrdiff_t>((a + 1) * width),
                                        flat_edges.begin() + static_cast<std::ptrdiff_t>(b * width),
                                        flat_edges.begin() + static_cast<std::ptrdiff_t>((b + 1) * width));
  };
  std::sort(order.begin(), order.end(), row_less);
  flat_.reserve(flat_edges.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (i > 0 && !row_less(order[i - 1], order[i])) {
      throw std::invalid_argument("hypergraph: duplicate edge");
    }
    const auto begin = flat_edges.begin() + static_cast<std::ptrdiff_t>(order[i] * width);
    flat_.insert(flat_.end(), begin, begin + static_cast<std::ptrdiff_t>(width));
  }
}

Incidence::Incidence(const Hypergraph& h) {
  const auto n = static_cast<std::size_t>(h.N());
  offsets_.assign(n + 2, 0);
  for (Vertex v : h.flat_edges()) ++offsets_[v + 1];
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  edge_ids_.resize(h.flat_edges().size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    for (Vertex v : h.edge(e)) edge_ids_[cursor[v]++] = static_cast<std::uint32_t>(e);
  }
}

std::string encode_edge(std::span<const Vertex> sorted_edge) {
  std::string key(sorted_edge.size() * 4, '\0');
  for (std::size_t i = 0; i < sorted_edge.size(); ++i) {
    const Vertex v = sorted_edge[i];
    for (int b = 0; b < 4; ++b) key[i * 4 + static_cast<std::size_t>(b)] = static_cast<char>((v >> (8 * b)) & 0xFF);
  }
  return key;
}

Hypergraph sample_hypergraph(const ModelParams& params, RngStream& rng, SamplingStats* stats) {
  const SubsetCount candidates = count_subsets(params.N, params.d);
  const double total = candidates.value();
  if (!(total >= 1.0)) throw std::invalid_argument("sample_hypergraph: no candidate edges");
  const std::uint64_t target = sample_binomial(total, params.p, rng);
  if (static_cast<double>(target) > total) throw std::runtime_error("sample_hypergraph: edge count exceeds C(N, d)");

  const auto width = static_cast<std::size_t>(params.d);
  std::vector<Vertex> flat;
  flat.reserve(static_cast<std::size_t>(target) * width);
  std::unordered_set<std::string> seen;
  seen.reserve(static_cast<std::size_t>(target) * 2);
  std::vector<std::uint64_t> ranks(width);
  std::vector<Vertex> edge(width);
  std::uint64_t rejections = 0;
  while (seen.size() < target) {
    sample_rank_subset(static_cast<std::uint64_t>(params.N), ranks, rng);
    for (std::size_t j = 0; j < width; ++j) edge[j] = static_cast<Vertex>(ranks[j] + 1);
    if (seen.insert(encode_edge(edge)).second) {
      flat.insert(flat.end(), edge.begin(), edge.end());
    } else {
      ++rejections;
    }
  }
  if (stats != nullptr) {
    stats->target_edges = target;
    stats->rejections = rejections;
    stats->candidate_edges = total;
  }
  return Hypergraph(params.N, params.d, std::move(flat), rng.master_seed());
}

}  // namespace hypergiant
