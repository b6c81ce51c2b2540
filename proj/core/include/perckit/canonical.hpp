#pragma once

#include <string>
#include <vector>

#include "perckit/graph.hpp"

namespace perckit {

// A canonical form is the graph6 encoding of a canonically relabeled copy
// of the graph, so two graphs have equal forms exactly when they are
// isomorphic.  The canonical labeling is the vertex ordering whose
// column-major upper-triangle adjacency bits are lexicographically
// largest, found by exact search over permutations with pruning.
using CanonicalForm = std::string;

// Guard: exact search is only offered up to order 12.
inline constexpr int kCanonicalOrderCap = 12;

CanonicalForm canonical_form(const Graph& g);

// The permutation (old index -> new index) realizing the canonical form.
// Deterministic: among equivalent labelings the search keeps the first
// one found, visiting candidate vertices in ascending index order.
std::vector<int> canonical_labeling(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace perckit
