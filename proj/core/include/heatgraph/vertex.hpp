#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace heatgraph {

/// Opaque vertex label. Graphs on structured vertex sets (lines, lattices,
/// products) encode their coordinates into the id; see the codec helpers below.
struct VertexId {
  std::uint64_t value = 0;

  friend constexpr bool operator==(VertexId a, VertexId b) { return a.value == b.value; }
  friend constexpr bool operator!=(VertexId a, VertexId b) { return a.value != b.value; }
  friend constexpr bool operator<(VertexId a, VertexId b) { return a.value < b.value; }
};

struct VertexIdHash {
  std::size_t operator()(VertexId v) const noexcept {
    return std::hash<std::uint64_t>{}(v.value);
  }
};

// Signed <-> unsigned zigzag codec, used by line and lattice vertex encodings:
// 0,-1,1,-2,2,... -> 0,1,2,3,4,...
std::uint64_t zigzag_encode(std::int64_t n);
std::int64_t zigzag_decode(std::uint64_t u);

// Cantor pairing on naturals. Throws std::overflow_error past 2^63-ish inputs.
std::uint64_t pair_encode(std::uint64_t a, std::uint64_t b);
std::pair<std::uint64_t, std::uint64_t> pair_decode(std::uint64_t p);

// Fixed-arity tuples fold to a single id: enc(a0,...,ak) = pair(a0, enc(a1,...,ak)).
std::uint64_t tuple_encode(std::span<const std::uint64_t> parts);
std::vector<std::uint64_t> tuple_decode(std::uint64_t id, std::size_t arity);

}  // namespace heatgraph
