#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "perckit/conditions.hpp"
#include "perckit/families.hpp"
#include "perckit/graph.hpp"

namespace perckit {

// The four statements the toolkit re-checks over graph corpora.
//
//   Fpr:              sigma2 >= n    implies m(G,2) = 2, no exceptions.
//   Ore:              sigma2 >= n-2  implies m(G,2) = 2 unless the graph
//                     lies in G0, G1, G2, G3, or X.
//   Chvatal:          the weak Chvatal condition implies m(G,2) = 2 unless
//                     the graph is disconnected, has exactly two vertices
//                     of degree one (and is neither P2 nor P3), or is C5.
//   ChvatalCorollary: Chvatal's condition implies m(G,2) = 2, no
//                     exceptions.
enum class Theorem { Fpr, Ore, Chvatal, ChvatalCorollary };

std::string to_string(Theorem t);
std::optional<Theorem> theorem_from_string(const std::string& name);

struct GraphRecord {
    std::string graph6;
    int order = 0;
    bool hypothesis = false;  // graphs of order < 2 never satisfy it
    bool conclusion = false;  // m(G,2) = 2
    std::string exception;    // applicable exception label, or empty
    bool counterexample = false;
};

struct TheoremVerdict {
    Theorem theorem = Theorem::Fpr;
    std::int64_t total = 0;
    std::int64_t hypothesis_count = 0;
    std::int64_t exception_count = 0;
    std::vector<GraphRecord> counterexamples;

    bool pass() const { return counterexamples.empty(); }
};

// Pull-based graph stream: returns graphs until exhausted.
using GraphSource = std::function<std::optional<Graph>()>;

// All graphs of orders 1..max_n from the built-in enumerator (max_n <= 9).
GraphSource enumeration_source(int max_n);

// graph6 lines from a stream; '#' comments and blank lines are skipped,
// parse errors carry the line number.  Graphs of order > max_n are
// dropped when max_n > 0.
GraphSource graph6_stream_source(std::istream& in, int max_n = 0);

// Evaluates one graph against one theorem.  The corpus backs the X lookup
// for Ore.  Exception labels: "g0".."g3", "x" (Ore); "disconnected",
// "two_degree_one", "c5" (Chvatal).
GraphRecord check_theorem(Theorem t, const Graph& g, const XCorpus& corpus);

// Streams the corpus through check_theorem, keeping counterexamples and
// totals; per-graph records go to the sink when one is given.
TheoremVerdict verify_theorem(Theorem t, const GraphSource& source, const XCorpus& corpus,
                              const std::function<void(const GraphRecord&)>& sink = nullptr);

TheoremVerdict verify_fpr_theorem(const GraphSource& source);
TheoremVerdict verify_ore_theorem(const GraphSource& source);
TheoremVerdict verify_chvatal_theorem(const GraphSource& source);
TheoremVerdict verify_chvatal_corollary(const GraphSource& source);

// Partition merge: totals add, counterexample lists concatenate.
TheoremVerdict merge(TheoremVerdict a, const TheoremVerdict& b);

// Sharpness check for the degree-sequence conditions: the sequence
// sharpness_sequence(n, i, weak) fails the targeted condition (Chvatal
// when weak is false, weak Chvatal when true) yet every realization
// sampled by degree-preserving edge switches has m(G,2) = 2, so neither
// condition is monotone best possible.
struct MonotoneReport {
    int n = 0;
    int i = 0;
    bool weak = false;
    DegreeSequence sequence;
    bool fails_target_condition = false;
    bool passes_weak_condition = false;  // of interest when weak is false
    bool two_universal = false;          // >= 2 entries equal to n-1
    int samples = 0;
    bool all_m2 = false;
    bool join_checked = false;        // isomorphism check ran (n <= 12)
    bool all_isomorphic_join = false; // every sample matches K_i v (K_i' u K_{n-2i})
    bool confirmed = false;           // fails_target && two_universal && all_m2
};

MonotoneReport verify_monotone_counterexample(int n, int i, bool weak, int samples = 100,
                                              std::uint64_t seed = 0x7e7c0de5eedULL);

}  // namespace perckit
