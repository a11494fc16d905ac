#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace hypergiant {

/// One SplitMix64 step: advances state by 0x9E3779B97F4A7C15 and returns the
/// finalized value (multipliers 0xBF58476D1CE4E5B9, 0x94D049BB133111EB).
std::uint64_t splitmix64(std::uint64_t& state);

/// Reproducible xoshiro256** stream addressed by (master_seed, stream_index).
///
/// Seeding: a SplitMix64 walker starts at
///   master_seed ^ finalize(stream_index + 0x9E3779B97F4A7C15)
/// where finalize is the SplitMix64 output function,
/// and its next four outputs form the xoshiro state. The output depends only
/// on the two integers and fixed-width integer arithmetic, so every platform
/// produces the same stream. uniform() and below() are defined on top of the
/// raw 64-bit output without any standard-library distribution.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return next(); }
  std::uint64_t next();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer on [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

 private:
  std::array<std::uint64_t, 4> state_{};
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
};

}  // namespace hypergiant
