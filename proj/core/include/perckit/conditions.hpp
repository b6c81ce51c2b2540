#pragma once

#include <random>
#include <string>

#include "perckit/graph.hpp"

namespace perckit {

// Minimum degree sum over non-adjacent vertex pairs; infinite when the
// graph is complete (no such pair exists).
struct Sigma2 {
    bool infinite = false;
    int value = 0;  // meaningful only when finite

    bool at_least(int threshold) const { return infinite || value >= threshold; }
    std::string to_string() const { return infinite ? "Infinite" : std::to_string(value); }

    friend bool operator==(const Sigma2&, const Sigma2&) = default;
};

Sigma2 sigma2(const Graph& g);  // requires order >= 2

// delta(G) >= (r-1)/r * n, compared exactly over the rationals.
bool dirac_fpr(const Graph& g, int r);  // requires r >= 2

// delta(G) >= floor(n/2) + 1 for r = 3; delta(G) >= floor(n/2) + r - 3 for
// r >= 4.  Pure threshold test; see gunderson_size_ok for the order side
// conditions that accompany it.
bool gunderson(const Graph& g, int r);  // requires r >= 3

// Whether the order side condition attached to the Gunderson threshold is
// known to hold: n >= 30 for r = 3; unknown for r >= 4 (stated only as
// "sufficiently large", with no explicit constant), so always false there.
bool gunderson_size_ok(int n, int r);

// For the ascending degree sequence d_1 <= ... <= d_n: every integer i
// with 1 <= i < n/2 satisfies d_i >= i+1 or d_{n-i} >= n-i.  Vacuously
// true when the range is empty (n <= 2).
bool chvatal_condition(const DegreeSequence& d);

// Same with the weakened second disjunct d_{n-i} >= n-i-1.
bool weak_chvatal_condition(const DegreeSequence& d);

// Erdos-Gallai test: whether some simple graph realizes d.
bool is_graphic(const DegreeSequence& d);

// Deterministic Havel-Hakimi realization: the vertex of highest residual
// degree connects to the next-highest ones, ties by original index.
// Throws on non-graphic input.
Graph realize(const DegreeSequence& d);

// Pointwise s_i >= t_i over the sorted sequences; lengths must match.
bool majorizes(const DegreeSequence& s, const DegreeSequence& t);

// The sequence (i^i, (n-i-1)^(n-2i), (n-1)^i), or with middle value n-i-2
// when weak is set (n must then be even).  Requires 2 <= i < n/2.
// Exponents are multiplicities; the result is sorted and always graphic.
DegreeSequence sharpness_sequence(int n, int i, bool weak);

// Degree-preserving randomization: 10 * |E| attempted 2-edge switches,
// each kept only when it preserves simplicity.
Graph edge_switch_randomize(const Graph& g, std::mt19937_64& rng);

// Aggregate report over one graph at threshold r (used by the CLI).
struct ConditionReport {
    int n = 0;
    int r = 0;
    Sigma2 sigma2;
    int min_degree = 0;
    bool ore_n = false;          // sigma2 >= n
    bool ore_n_minus_2 = false;  // sigma2 >= n-2
    bool dirac_fpr = false;
    bool gunderson = false;       // false when r < 3
    bool gunderson_size_ok = false;
    bool chvatal = false;
    bool weak_chvatal = false;
};

ConditionReport evaluate_conditions(const Graph& g, int r);  // requires order >= 2

// "2,2,2,2,2" -> DegreeSequence; rejects anything but comma-separated
// integers valid for their own length.
DegreeSequence parse_degree_sequence(const std::string& text);

}  // namespace perckit
