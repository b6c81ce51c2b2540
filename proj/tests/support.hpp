#pragma once

// Reference implementations the tests trust instead of the library's own
// algorithms.  Everything below recomputes from a plain adjacency matrix:
// closure by repeated scanning, minimum contagious sets by full subset
// enumeration, isomorphism by trying every permutation, and graphicality by
// enumerating every labeled graph of the given order.  Slow on purpose.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "perckit/families.hpp"
#include "perckit/graph.hpp"

namespace support {

using AdjMatrix = std::vector<std::vector<bool>>;

inline AdjMatrix matrix(const perckit::Graph& g) {
    const int n = g.order();
    AdjMatrix a(size_t(n), std::vector<bool>(size_t(n), false));
    for (auto [u, v] : g.edges()) {
        a[size_t(u)][size_t(v)] = true;
        a[size_t(v)][size_t(u)] = true;
    }
    return a;
}

inline std::uint32_t oracle_close(const AdjMatrix& a, std::uint32_t seed, int r) {
    const int n = int(a.size());
    std::uint32_t cur = seed;
    for (bool grew = true; grew;) {
        grew = false;
        for (int v = 0; v < n; ++v) {
            if (cur >> v & 1) continue;
            int active = 0;
            for (int u = 0; u < n; ++u)
                if ((cur >> u & 1) && a[size_t(v)][size_t(u)]) ++active;
            if (active >= r) {
                cur |= std::uint32_t(1) << v;
                grew = true;
            }
        }
    }
    return cur;
}

// One synchronous round, for cross-checking traces.
inline std::uint32_t oracle_step(const AdjMatrix& a, std::uint32_t cur, int r) {
    const int n = int(a.size());
    std::uint32_t next = cur;
    for (int v = 0; v < n; ++v) {
        if (cur >> v & 1) continue;
        int active = 0;
        for (int u = 0; u < n; ++u)
            if ((cur >> u & 1) && a[size_t(v)][size_t(u)]) ++active;
        if (active >= r) next |= std::uint32_t(1) << v;
    }
    return next;
}

// Smallest contagious set size by checking every subset, k ascending.
// Within one k, masks ascend, so the returned mask is the least witness.
struct OracleMin {
    int m = 0;
    std::uint32_t witness = 0;
};

inline OracleMin oracle_min_contagious(const perckit::Graph& g, int r) {
    const int n = g.order();
    const AdjMatrix a = matrix(g);
    const std::uint32_t full = n == 0 ? 0 : ~std::uint32_t(0) >> (32 - n);
    for (int k = std::min(r, n);; ++k) {
        for (std::uint32_t mask = 0; mask <= full; ++mask) {
            if (std::popcount(mask) != k) continue;
            if (oracle_close(a, mask, r) == full) return {k, mask};
        }
    }
}

inline std::uint32_t to_mask(const perckit::VertexSet& s) {
    std::uint32_t mask = 0;
    s.for_each([&](int v) { mask |= std::uint32_t(1) << v; });
    return mask;
}

inline bool oracle_isomorphic(const perckit::Graph& a, const perckit::Graph& b) {
    const int n = a.order();
    if (n != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int u = 0; u < n && match; ++u)
            for (int v = u + 1; v < n && match; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[size_t(u)], perm[size_t(v)]))
                    match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Sorted degree multisets of every labeled graph of order n (n <= 6 sane).
inline const std::set<std::vector<int>>& oracle_graphic_multisets(int n) {
    static std::map<int, std::set<std::vector<int>>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::set<std::vector<int>> out;
    const int bits = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << bits); ++mask) {
        std::vector<int> deg(size_t(n), 0);
        int bit = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u, ++bit)
                if (mask >> bit & 1) {
                    ++deg[size_t(u)];
                    ++deg[size_t(v)];
                }
        std::sort(deg.begin(), deg.end());
        out.insert(deg);
    }
    return cache.emplace(n, std::move(out)).first->second;
}

inline perckit::Graph gnp(int n, double p, std::mt19937_64& rng) {
    perckit::Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline perckit::Graph random_relabel(const perckit::Graph& g, std::mt19937_64& rng) {
    const int n = g.order();
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    perckit::Graph h(n);
    for (auto [u, v] : g.edges()) h.add_edge(perm[size_t(u)], perm[size_t(v)]);
    return h;
}

inline perckit::Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    perckit::Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline std::vector<int> sorted_degrees(const perckit::Graph& g) {
    std::vector<int> deg;
    deg.reserve(size_t(g.order()));
    for (int v = 0; v < g.order(); ++v) deg.push_back(g.degree(v));
    std::sort(deg.begin(), deg.end());
    return deg;
}

// Maps a classified graph back onto the constructor's labeling: X-side
// fillers first, then x' and x at the top of the X block, then y, y' and
// the remaining Y-side vertices.  Empty when the witness is inconsistent.
inline std::optional<perckit::Graph> rebuild_from_witness(const perckit::Graph& g,
                                                          const perckit::FamilyWitness& w) {
    const int n = g.order();
    const int a = int(w.side_x.count());
    std::vector<int> perm(size_t(n), -1);
    int next = 0;
    w.side_x.for_each([&](int v) {
        if (v != w.x && v != w.xp) perm[size_t(v)] = next++;
    });
    if (w.xp >= 0) perm[size_t(w.xp)] = next++;
    if (w.x >= 0) perm[size_t(w.x)] = next++;
    if (next != a) return std::nullopt;
    if (w.y >= 0) perm[size_t(w.y)] = next++;
    if (w.yp >= 0) perm[size_t(w.yp)] = next++;
    w.side_y.for_each([&](int v) {
        if (v != w.y && v != w.yp) perm[size_t(v)] = next++;
    });
    if (next != n) return std::nullopt;
    for (int v : perm)
        if (v < 0) return std::nullopt;
    return perckit::relabel(g, perm);
}

}  // namespace support
