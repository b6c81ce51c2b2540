#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "perckit/graph.hpp"

namespace perckit {

// Guard: exhaustive isomorph-free generation is offered up to order 9.
inline constexpr int kEnumerateOrderCap = 9;

// Streams exactly one representative per isomorphism class of simple
// graphs on n vertices.  Orderly generation: starting from the empty
// graph, each level adds one edge to every representative of the previous
// level and keeps only new canonical forms.  Emission order is edge count
// ascending, then ascending packed adjacency key; deterministic.
void enumerate_graphs(int n, const std::function<void(const Graph&)>& emit);

// Materialized form of the stream.  Prefer the streaming call for n >= 9.
std::vector<Graph> all_graphs(int n);

namespace detail {

// Upper-triangle adjacency bits in column-major order, packed from bit 0
// upward; fits one word for n <= 11.
std::uint64_t pack_triangle(const Graph& g);
Graph unpack_triangle(std::uint64_t bits, int n);

// Packed canonical keys of every isomorphism class on n vertices, in
// emission order.  Compact alternative when the caller re-materializes
// graphs lazily.
std::vector<std::uint64_t> enumerate_packed(int n);

}  // namespace detail

}  // namespace perckit
