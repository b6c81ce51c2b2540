#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "perckit/vertex_set.hpp"

namespace perckit {

/// Simple undirected graph on labeled vertices 0..n-1 with per-vertex
/// adjacency bitsets. Symmetric and irreflexive by construction.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) {
        if (n < 0 || n > 1024)
            throw std::invalid_argument("Graph: order must be in [0, 1024], got " +
                                        std::to_string(n));
        n_ = n;
        adj_.assign(size_t(n), VertexSet(n));
    }

    int order() const { return n_; }

    bool has_edge(int u, int v) const { return u != v && adj_[check(u)].contains(check(v)); }

    void add_edge(int u, int v) {
        check(u);
        check(v);
        if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
        adj_[size_t(u)].insert(v);
        adj_[size_t(v)].insert(u);
    }

    void remove_edge(int u, int v) {
        check(u);
        check(v);
        adj_[size_t(u)].erase(v);
        adj_[size_t(v)].erase(u);
    }

    const VertexSet& neighbors(int v) const { return adj_[size_t(check(v))]; }

    int degree(int v) const { return adj_[size_t(check(v))].count(); }

    int min_degree() const {
        int d = n_ > 0 ? degree(0) : 0;
        for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    int64_t edge_count() const {
        int64_t twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            adj_[size_t(u)].for_each([&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    int check(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("Graph: vertex " + std::to_string(v) +
                                    " outside order " + std::to_string(n_));
        return v;
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

/// Non-decreasing degree sequence with its length. Construction sorts the
/// input and rejects entries outside [0, n-1].
class DegreeSequence {
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<int> degrees);

    int size() const { return int(values_.size()); }
    /// 1-based access matching the usual d_1 <= ... <= d_n indexing.
    int at(int i) const;
    const std::vector<int>& values() const { return values_; }
    int64_t sum() const;

    bool operator==(const DegreeSequence& other) const { return values_ == other.values_; }
    bool operator!=(const DegreeSequence& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    std::vector<int> values_;
};

DegreeSequence degree_sequence(const Graph& g);

/// Maximal connected vertex sets, ordered by their lowest vertex.
std::vector<VertexSet> components(const Graph& g);

/// Closed neighborhood reachability from a starting set.
VertexSet reachable_from(const Graph& g, const VertexSet& start);

bool is_clique(const Graph& g, const VertexSet& vertices);

/// Copy of g with vertex v renamed perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

/// Subgraph induced on the given vertices, relabeled 0..k-1 in ascending
/// order of the original labels.
Graph induced_subgraph(const Graph& g, const VertexSet& vertices);

}  // namespace perckit
