#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hypergiant/rng.hpp"
#include "hypergiant/theory.hpp"

namespace hypergiant {

using Vertex = std::uint32_t;

/// A d-uniform hypergraph on vertices 1..N.
///
/// Edges are stored flat, d ids per edge, each edge strictly increasing and
/// the edge list in lexicographic order, so equal edge sets compare and
/// serialize identically. Construction validates every invariant.
class Hypergraph {
 public:
  Hypergraph(std::int64_t N, int d, std::vector<Vertex> flat_edges, std::uint64_t seed = 0);

  std::int64_t N() const { return N_; }
  int d() const { return d_; }
  std::size_t edge_count() const { return flat_.size() / static_cast<std::size_t>(d_); }
  std::span<const Vertex> edge(std::size_t i) const {
    return {flat_.data() + i * static_cast<std::size_t>(d_), static_cast<std::size_t>(d_)};
  }
  std::span<const Vertex> flat_edges() const { return flat_; }
  /// Seed recorded by the sampler (0 when unknown).
  std::uint64_t seed() const { return seed_; }

  bool operator==(const Hypergraph& other) const = default;

 private:
  std::int64_t N_;
  int d_;
  std::vector<Vertex> flat_;
  std::uint64_t seed_;
};

/// Vertex -> incident edge indices, CSR layout.
class Incidence {
 public:
  explicit Incidence(const Hypergraph& h);
  std::span<const std::uint32_t> edges_of(Vertex v) const {
    return {edge_ids_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> edge_ids_;
};

/// Fixed-width canonical key of a sorted vertex tuple: 4 little-endian bytes
/// per id.
std::string encode_edge(std::span<const Vertex> sorted_edge);

struct SamplingStats {
  std::uint64_t target_edges = 0;
  std::uint64_t rejections = 0;
  double candidate_edges = 0.0;
};

/// Draws M ~ Binomial(C(N, d), p), then M distinct uniform d-subsets with
/// rejection of duplicates. Equivalent in law to independent inclusion of
/// every d-subset with probability p.
Hypergraph sample_hypergraph(const ModelParams& params, RngStream& rng, SamplingStats* stats = nullptr);

}  // namespace hypergiant
