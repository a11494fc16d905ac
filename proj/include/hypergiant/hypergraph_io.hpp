#pragma once

#include <filesystem>
#include <iosfwd>

#include "hypergiant/hypergraph.hpp"

namespace hypergiant {

// HGR v1 text format:
//   HGR v1 <N> <d> <M> <seed>
//   followed by M lines of d space-separated ascending vertex ids in [1, N].
// Lines are '\n' terminated; edges are written in canonical (lexicographic)
// order. The reader accepts any edge order and validates every invariant.

void write_hgr(std::ostream& out, const Hypergraph& h);
void write_hgr(const std::filesystem::path& path, const Hypergraph& h);

/// Throws std::invalid_argument naming the offending line on malformed input.
Hypergraph read_hgr(std::istream& in);
Hypergraph read_hgr(const std::filesystem::path& path);

}  // namespace hypergiant
