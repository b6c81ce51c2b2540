#include "perckit/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "perckit/graph6.hpp"
#include "canon_core.hpp"

namespace perckit {

namespace detail {

namespace {

struct Search {
    const std::uint16_t* adj;
    int n;
    int placed[kCanonMaxN];
    std::uint16_t placed_mask = 0;
    std::uint16_t curcol[kCanonMaxN];
    std::uint16_t bestcol[kCanonMaxN];
    int bestorder[kCanonMaxN];
    bool have_best = false;
    unsigned version = 0;

    std::uint16_t column(int v, int depth) const {
        std::uint16_t col = 0;
        for (int j = 0; j < depth; ++j)
            col = std::uint16_t(col << 1 | (adj[v] >> placed[j] & 1));
        return col;
    }

    // par_eq: the columns above this depth are identical to the best
    // complete string's; false also covers "no best yet" and "strictly
    // greater prefix", both of which disable pruning.
    void dfs(int depth, bool par_eq) {
        if (depth == n) {
            if (!par_eq) {
                std::copy(curcol, curcol + n, bestcol);
                std::copy(placed, placed + n, bestorder);
                have_best = true;
                ++version;
            }
            return;
        }

        int cands[kCanonMaxN];
        int nc = 0;
        std::uint16_t maxcol = 0;
        for (int v = 0; v < n; ++v) {
            if (placed_mask >> v & 1) continue;
            std::uint16_t col = column(v, depth);
            if (nc == 0 || col > maxcol) {
                maxcol = col;
                nc = 0;
                cands[nc++] = v;
            } else if (col == maxcol) {
                cands[nc++] = v;
            }
        }

        bool eq = false;
        if (have_best && par_eq) {
            if (maxcol < bestcol[depth]) return;
            eq = maxcol == bestcol[depth];
        }

        // drop candidates twin to an earlier one (their subtrees coincide)
        int kept[kCanonMaxN];
        int nk = 0;
        for (int i = 0; i < nc; ++i) {
            int v = cands[i];
            bool dup = false;
            for (int j = 0; j < nk && !dup; ++j) {
                int u = kept[j];
                std::uint16_t ub = std::uint16_t(1u << u), vb = std::uint16_t(1u << v);
                dup = ((adj[u] ^ adj[v]) & std::uint16_t(~(ub | vb))) == 0;
            }
            if (!dup) kept[nk++] = v;
        }

        curcol[depth] = maxcol;
        unsigned seen = version;
        for (int i = 0; i < nk; ++i) {
            int v = kept[i];
            placed[depth] = v;
            placed_mask |= std::uint16_t(1u << v);
            dfs(depth + 1, eq);
            placed_mask &= std::uint16_t(~(1u << v));
            if (version != seen) {
                // a new best came from this subtree, so our prefix now
                // matches it exactly
                seen = version;
                eq = true;
            }
        }
    }
};

}  // namespace

void canonical_order(const std::uint16_t* adj, int n, int* order) {
    Search s;
    s.adj = adj;
    s.n = n;
    s.dfs(0, false);
    std::copy(s.bestorder, s.bestorder + n, order);
}

}  // namespace detail

namespace {

void check_canonical_order(const Graph& g) {
    if (g.order() < 1 || g.order() > kCanonicalOrderCap)
        throw std::invalid_argument("canonical form: order " + std::to_string(g.order()) +
                                    " outside [1, " + std::to_string(kCanonicalOrderCap) + "]");
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    check_canonical_order(g);
    const int n = g.order();
    std::uint16_t adj[detail::kCanonMaxN] = {};
    for (int v = 0; v < n; ++v)
        g.neighbors(v).for_each([&](int u) { adj[v] |= std::uint16_t(1u << u); });
    int order[detail::kCanonMaxN];
    detail::canonical_order(adj, n, order);
    std::vector<int> perm(static_cast<size_t>(n));
    for (int pos = 0; pos < n; ++pos) perm[size_t(order[pos])] = pos;
    return perm;
}

CanonicalForm canonical_form(const Graph& g) {
    return write_graph6(relabel(g, canonical_labeling(g)));
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    if (degree_sequence(a).values() != degree_sequence(b).values()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace perckit
