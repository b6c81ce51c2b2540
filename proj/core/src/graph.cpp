#include "perckit/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace perckit {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : values_(std::move(degrees)) {
    const int n = int(values_.size());
    for (int d : values_) {
        if (d < 0 || d >= std::max(n, 1))
            throw std::invalid_argument("DegreeSequence: entry " + std::to_string(d) +
                                        " outside [0, n-1] for n=" + std::to_string(n));
    }
    std::sort(values_.begin(), values_.end());
}

int DegreeSequence::at(int i) const {
    if (i < 1 || i > size())
        throw std::out_of_range("DegreeSequence: index " + std::to_string(i) +
                                " outside [1, " + std::to_string(size()) + "]");
    return values_[size_t(i - 1)];
}

int64_t DegreeSequence::sum() const {
    return std::accumulate(values_.begin(), values_.end(), int64_t{0});
}

std::string DegreeSequence::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ',';
        os << values_[i];
    }
    return os.str();
}

DegreeSequence degree_sequence(const Graph& g) {
    std::vector<int> d(size_t(g.order()));
    for (int v = 0; v < g.order(); ++v) d[size_t(v)] = g.degree(v);
    return DegreeSequence(std::move(d));
}

VertexSet reachable_from(const Graph& g, const VertexSet& start) {
    VertexSet seen = start;
    VertexSet frontier = start;
    while (!frontier.empty()) {
        VertexSet next(g.order());
        frontier.for_each([&](int v) { next |= g.neighbors(v); });
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    return seen;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet remaining = VertexSet::full(g.order());
    while (!remaining.empty()) {
        VertexSet start(g.order());
        start.insert(remaining.first());
        VertexSet comp = reachable_from(g, start);
        out.push_back(comp);
        remaining -= comp;
    }
    return out;
}

bool is_clique(const Graph& g, const VertexSet& vertices) {
    bool ok = true;
    vertices.for_each([&](int v) {
        VertexSet need = vertices;
        need.erase(v);
        if (!need.is_subset_of(g.neighbors(v))) ok = false;
    });
    return ok;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (int(perm.size()) != g.order())
        throw std::invalid_argument("relabel: permutation length != graph order");
    Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(perm[size_t(u)], perm[size_t(v)]);
    return h;
}

Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
    std::vector<int> keep = vertices.to_vector();
    std::vector<int> pos(size_t(g.order()), -1);
    for (size_t i = 0; i < keep.size(); ++i) pos[size_t(keep[i])] = int(i);
    Graph h(int(keep.size()));
    for (int u : keep)
        g.neighbors(u).for_each([&](int v) {
            if (u < v && pos[size_t(v)] >= 0) h.add_edge(pos[size_t(u)], pos[size_t(v)]);
        });
    return h;
}

}  // namespace perckit
