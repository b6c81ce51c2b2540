#include "perckit/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "canon_core.hpp"

namespace perckit {

namespace detail {

namespace {

void check_pack_order(int n) {
    if (n < 0 || n > 11)
        throw std::invalid_argument("pack_triangle: order " + std::to_string(n) +
                                    " does not fit one word (max 11)");
}

std::uint64_t pack_masks(const std::uint16_t* adj, int n) {
    std::uint64_t bits = 0;
    int b = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++b)
            if (adj[col] >> row & 1) bits |= std::uint64_t(1) << b;
    return bits;
}

void unpack_masks(std::uint64_t bits, int n, std::uint16_t* adj) {
    std::fill(adj, adj + n, std::uint16_t(0));
    int b = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++b)
            if (bits >> b & 1) {
                adj[row] |= std::uint16_t(1u << col);
                adj[col] |= std::uint16_t(1u << row);
            }
}

std::uint64_t canonical_key(const std::uint16_t* adj, int n) {
    int order[kCanonMaxN];
    canonical_order(adj, n, order);
    std::uint64_t bits = 0;
    int b = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++b)
            if (adj[order[col]] >> order[row] & 1) bits |= std::uint64_t(1) << b;
    return bits;
}

}  // namespace

std::uint64_t pack_triangle(const Graph& g) {
    check_pack_order(g.order());
    std::uint16_t adj[kCanonMaxN] = {};
    for (int v = 0; v < g.order(); ++v)
        g.neighbors(v).for_each([&](int u) { adj[v] |= std::uint16_t(1u << u); });
    return pack_masks(adj, g.order());
}

Graph unpack_triangle(std::uint64_t bits, int n) {
    check_pack_order(n);
    Graph g(n);
    int b = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++b)
            if (bits >> b & 1) g.add_edge(row, col);
    return g;
}

std::vector<std::uint64_t> enumerate_packed(int n) {
    if (n < 1 || n > kEnumerateOrderCap)
        throw std::invalid_argument("enumerate_graphs: order " + std::to_string(n) +
                                    " outside [1, " + std::to_string(kEnumerateOrderCap) + "]");

    std::vector<std::uint64_t> out;
    std::vector<std::uint64_t> level = {0};  // the empty graph is canonical
    out.push_back(0);

    const int max_edges = n * (n - 1) / 2;
    std::uint16_t adj[detail::kCanonMaxN];
    for (int e = 0; e < max_edges; ++e) {
        std::unordered_set<std::uint64_t> seen;
        for (std::uint64_t key : level) {
            unpack_masks(key, n, adj);
            for (int u = 0; u + 1 < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (adj[u] >> v & 1) continue;
                    adj[u] |= std::uint16_t(1u << v);
                    adj[v] |= std::uint16_t(1u << u);
                    seen.insert(canonical_key(adj, n));
                    adj[u] &= std::uint16_t(~(1u << v));
                    adj[v] &= std::uint16_t(~(1u << u));
                }
        }
        level.assign(seen.begin(), seen.end());
        std::sort(level.begin(), level.end());
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace detail

void enumerate_graphs(int n, const std::function<void(const Graph&)>& emit) {
    for (std::uint64_t key : detail::enumerate_packed(n)) emit(detail::unpack_triangle(key, n));
}

std::vector<Graph> all_graphs(int n) {
    std::vector<Graph> out;
    enumerate_graphs(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace perckit
