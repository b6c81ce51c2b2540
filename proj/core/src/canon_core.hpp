#pragma once

#include <cstdint>

namespace perckit::detail {

inline constexpr int kCanonMaxN = 12;

// Finds the vertex ordering that maximizes the column-major upper-triangle
// adjacency bitstring (the graph6 bit order), by depth-first search over
// partial orderings.  Three prunings keep it fast: at each depth only
// candidates achieving the largest next column are tried; candidates whose
// transposition with an already-tried candidate is an automorphism are
// skipped; and branches whose prefix falls below the best complete string
// are cut.
//
// adj[i] holds vertex i's neighbors as a bitmask.  order[pos] receives the
// original index of the vertex placed at position pos.
void canonical_order(const std::uint16_t* adj, int n, int* order);

}  // namespace perckit::detail
