#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "perckit/graph.hpp"
#include "perckit/vertex_set.hpp"

namespace perckit {

// The exceptional families for the sigma2 >= n-2 characterization.  G0 is
// the unions of two disjoint non-empty cliques X, Y.  G1, G2, G3 arise
// from such a union by picking {x,x'} in X and {y,y'} in Y, adding the
// edges xy and x'y', and deleting xx' and yy' if they exist; the cases are
// x=x', y=y' (G1), x!=x', y!=y' (G2), and x=x', y!=y' (G3, up to swapping
// the roles of the sides).  X is the residual finite set: graphs with
// sigma2 >= n-2 and m(G,2) > 2 lying in none of the four families.
enum class FamilyKind { G0, G1, G2, G3, X, None };

std::string to_string(FamilyKind kind);

// Clique bipartition and surgery vertices certifying a G0-G3 match, in the
// labeling of the classified graph.  Slots that the case does not use stay
// -1 (G0: all four; G1: xp and yp; G3: xp).
struct FamilyWitness {
    VertexSet side_x;
    VertexSet side_y;
    int x = -1;
    int xp = -1;
    int y = -1;
    int yp = -1;
};

struct FamilyLabel {
    FamilyKind kind = FamilyKind::None;
    std::optional<FamilyWitness> witness;  // present for G0-G3
    int corpus_index = -1;                 // position in the corpus for X
};

// Guard: structural recognition is offered up to order 64.
inline constexpr int kClassifyOrderCap = 64;

// Deterministic family instances on a+b vertices: X clique on 0..a-1, Y
// clique on a..a+b-1, with x the highest X index, x' the second highest,
// y the lowest Y index, y' the second lowest.  Parameter ranges keep one
// vertex per side without cross edges, the proviso under which these
// graphs have sigma2 = n-2 and (except the two-vertex G0) m(G,2) > 2.
Graph make_g0(int a, int b);  // a, b >= 1
Graph make_g1(int a, int b);  // a, b >= 2
Graph make_g2(int a, int b);  // a, b >= 3
Graph make_g3(int a, int b);  // a >= 2, b >= 3

Graph make_complete(int n);  // n >= 1
Graph make_empty(int n);     // n >= 1
Graph make_path(int n);      // n >= 1
Graph make_cycle(int n);     // n >= 3
Graph make_union(const Graph& g, const Graph& h);  // h's vertices shifted up
Graph make_join(const Graph& g, const Graph& h);   // union plus all cross edges

struct XEntry {
    int order = 0;
    std::string graph6;     // canonical line as shipped
    std::string canonical;  // canonical form (equal to graph6 for derived corpora)
};

// The finite residual set: pairwise non-isomorphic graphs, each with
// sigma2 >= n-2, m(.,2) > 2, and no G0-G3 structure.
class XCorpus {
public:
    XCorpus() = default;
    XCorpus(std::vector<XEntry> entries, std::string provenance);

    const std::vector<XEntry>& entries() const { return entries_; }
    const std::string& provenance() const { return provenance_; }
    int size() const { return int(entries_.size()); }
    int max_order() const;
    int find_canonical(const std::string& form) const;  // index, or -1

    // Corpus file format: '#' comment lines (provenance), then one graph6
    // line per member.
    std::string to_file_string() const;
    static XCorpus parse(std::istream& in);

private:
    std::vector<XEntry> entries_;
    std::string provenance_;
};

// The corpus embedded in the library (derived over all graphs of order
// <= 8; see the shipped data file).
const XCorpus& builtin_x_corpus();

XCorpus load_x_corpus(const std::string& path);

// Structural recognition in the order G0, G1, G2, G3 (families take
// precedence), then membership lookup against the corpus, then None.
FamilyLabel classify_family(const Graph& g, const XCorpus& corpus);
FamilyLabel classify_family(const Graph& g);  // against the built-in corpus

// All graphs with order <= max_n, sigma2 >= n-2, m(G,2) > 2, and no G0-G3
// structure, deduplicated by canonical form and sorted by (order, graph6).
XCorpus derive_x(int max_n);                          // built-in enumeration, max_n <= 9
XCorpus derive_x(int max_n, std::istream& graph6_lines);  // external corpus stream

}  // namespace perckit
