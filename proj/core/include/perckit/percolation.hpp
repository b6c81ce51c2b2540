#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "perckit/graph.hpp"
#include "perckit/vertex_set.hpp"

namespace perckit {

// r-neighbor bootstrap percolation: starting from a seed set A0, a dormant
// vertex activates as soon as at least r of its neighbors are active, and
// active vertices stay active.  Rounds are synchronous: every dormant
// vertex with enough active neighbors activates simultaneously.

struct PercolationTrace {
    std::vector<VertexSet> rounds;  // A0, A1, ..., At; strictly increasing
    int r = 0;

    const VertexSet& closure() const { return rounds.back(); }
    int activation_rounds() const { return int(rounds.size()) - 1; }
};

struct MinContagiousResult {
    int m = 0;
    VertexSet witness;
    bool exact = false;
};

struct MaximalInfection {
    VertexSet set;   // a closure of maximum size over all 2-element seeds
    int u = -1;      // the seed pair achieving it
    int v = -1;
};

// Guard: the exact minimum-contagious-set search is offered up to order 40.
inline constexpr int kExactSolverOrderCap = 40;

PercolationTrace percolate(const Graph& g, const VertexSet& seed, int r);

VertexSet closure(const Graph& g, const VertexSet& seed, int r);

bool is_contagious(const Graph& g, const VertexSet& seed, int r);

// Exact minimum size of an r-contagious set, with a witness.  Iterates
// candidate sizes k = min(r, n), min(r, n)+1, ... and enumerates seed sets
// of each size, skipping any vertex already activated by previously chosen
// seeds (minimum sets never contain such a vertex).  The witness is the
// optimal seed set with the smallest bitmask value.
MinContagiousResult min_contagious(const Graph& g, int r);

// Fast path for the r = 2 question: a vertex pair whose closure is the
// whole graph, or absent when none exists.  Pairs are tried in descending
// degree-sum order, ties by ascending indices.
std::optional<std::pair<int, int>> m2_witness_pair(const Graph& g);

// Greedy r-contagious set: repeatedly add the vertex whose addition grows
// the closure the most, ties by lowest index.  Size bounds m(g, r) from
// above but need not be optimal.
VertexSet greedy_upper_bound(const Graph& g, int r);

// A maximum-cardinality closure over all 2-element seeds (r = 2 only).
MaximalInfection maximal_infection(const Graph& g, int r);

}  // namespace perckit
