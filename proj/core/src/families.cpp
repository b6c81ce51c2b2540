#include "perckit/families.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "perckit/canonical.hpp"
#include "perckit/conditions.hpp"
#include "perckit/enumerate.hpp"
#include "perckit/graph6.hpp"
#include "perckit/percolation.hpp"

namespace perckit {

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::G0: return "G0";
        case FamilyKind::G1: return "G1";
        case FamilyKind::G2: return "G2";
        case FamilyKind::G3: return "G3";
        case FamilyKind::X: return "X";
        case FamilyKind::None: return "None";
    }
    return "None";
}

namespace {

void add_clique(Graph& g, int lo, int hi) {  // vertices lo..hi-1
    for (int u = lo; u < hi; ++u)
        for (int v = u + 1; v < hi; ++v) g.add_edge(u, v);
}

void check_sides(const char* name, int a, int b, int min_a, int min_b) {
    if (a < min_a || b < min_b)
        throw std::invalid_argument(std::string(name) + ": sides (" + std::to_string(a) + ", " +
                                    std::to_string(b) + ") below the minimum (" +
                                    std::to_string(min_a) + ", " + std::to_string(min_b) + ")");
}

}  // namespace

Graph make_g0(int a, int b) {
    check_sides("make_g0", a, b, 1, 1);
    Graph g(a + b);
    add_clique(g, 0, a);
    add_clique(g, a, a + b);
    return g;
}

Graph make_g1(int a, int b) {
    check_sides("make_g1", a, b, 2, 2);
    Graph g = make_g0(a, b);
    g.add_edge(a - 1, a);  // xy
    return g;
}

Graph make_g2(int a, int b) {
    check_sides("make_g2", a, b, 3, 3);
    Graph g = make_g0(a, b);
    g.add_edge(a - 1, a);      // xy
    g.add_edge(a - 2, a + 1);  // x'y'
    g.remove_edge(a - 1, a - 2);
    g.remove_edge(a, a + 1);
    return g;
}

Graph make_g3(int a, int b) {
    check_sides("make_g3", a, b, 2, 3);
    Graph g = make_g0(a, b);
    g.add_edge(a - 1, a);      // xy
    g.add_edge(a - 1, a + 1);  // xy'
    g.remove_edge(a, a + 1);
    return g;
}

namespace {

void check_order_at_least(const char* name, int n, int least) {
    if (n < least)
        throw std::invalid_argument(std::string(name) + ": order must be >= " +
                                    std::to_string(least) + ", got " + std::to_string(n));
}

}  // namespace

Graph make_complete(int n) {
    check_order_at_least("make_complete", n, 1);
    Graph g(n);
    add_clique(g, 0, n);
    return g;
}

Graph make_empty(int n) {
    check_order_at_least("make_empty", n, 1);
    return Graph(n);
}

Graph make_path(int n) {
    check_order_at_least("make_path", n, 1);
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph make_cycle(int n) {
    check_order_at_least("make_cycle", n, 3);
    Graph g = make_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph make_union(const Graph& g, const Graph& h) {
    Graph u(g.order() + h.order());
    for (auto [a, b] : g.edges()) u.add_edge(a, b);
    for (auto [a, b] : h.edges()) u.add_edge(g.order() + a, g.order() + b);
    return u;
}

Graph make_join(const Graph& g, const Graph& h) {
    Graph j = make_union(g, h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) j.add_edge(u, g.order() + v);
    return j;
}

namespace {

// N(v) with the members listed removed / added; for neighborhood-equality
// checks below.
VertexSet minus(VertexSet s, std::initializer_list<int> drop) {
    for (int v : drop) s.erase(v);
    return s;
}

VertexSet plus(VertexSet s, std::initializer_list<int> add) {
    for (int v : add) s.insert(v);
    return s;
}

std::optional<FamilyWitness> recognize_g0(const Graph& g) {
    std::vector<VertexSet> comps = components(g);
    if (comps.size() != 2) return std::nullopt;
    if (!is_clique(g, comps[0]) || !is_clique(g, comps[1])) return std::nullopt;
    FamilyWitness w;
    w.side_x = comps[0];  // contains the lowest vertex
    w.side_y = comps[1];
    return w;
}

std::optional<FamilyWitness> recognize_g1(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        Graph cut = g;
        cut.remove_edge(u, v);
        std::vector<VertexSet> comps = components(cut);
        if (comps.size() != 2) continue;
        if (comps[0].contains(u) == comps[0].contains(v)) continue;
        if (!is_clique(cut, comps[0]) || !is_clique(cut, comps[1])) continue;
        FamilyWitness w;
        bool u_first = comps[0].contains(u);
        w.side_x = u_first ? comps[0] : comps[1];
        w.side_y = u_first ? comps[1] : comps[0];
        w.x = u;
        w.y = v;
        return w;
    }
    return std::nullopt;
}

std::optional<FamilyWitness> recognize_g2(const Graph& g) {
    const int n = g.order();
    for (int x = 0; x < n; ++x) {
        const VertexSet& nx = g.neighbors(x);
        for (int xp = 0; xp < n; ++xp) {
            if (xp == x || nx.contains(xp)) continue;  // xx' was deleted
            const VertexSet& nxp = g.neighbors(xp);
            VertexSet side_x = minus(plus(nx, {x, xp}), {});
            // y is x's one cross neighbor; try each in turn
            std::vector<int> ys = nx.to_vector();
            for (int y : ys) {
                if (y == xp || nxp.contains(y)) continue;  // y-x' must not be an edge
                for (int yp : nxp.to_vector()) {
                    if (yp == y || yp == x || nx.contains(yp)) continue;
                    if (g.has_edge(y, yp)) continue;  // yy' was deleted
                    VertexSet X = minus(side_x, {y});
                    VertexSet Y = X.complement();
                    if (!Y.contains(y) || !Y.contains(yp)) continue;
                    // sides are cliques after repairing xx', yy'; cross
                    // edges are exactly xy and x'y'
                    const VertexSet& ny = g.neighbors(y);
                    const VertexSet& nyp = g.neighbors(yp);
                    if (g.neighbors(x) != plus(minus(X, {x, xp}), {y})) continue;
                    if (nxp != plus(minus(X, {x, xp}), {yp})) continue;
                    if (ny != plus(minus(Y, {y, yp}), {x})) continue;
                    if (nyp != plus(minus(Y, {y, yp}), {xp})) continue;
                    bool ok = true;
                    X.for_each([&](int v) {
                        if (v != x && v != xp && g.neighbors(v) != minus(X, {v})) ok = false;
                    });
                    Y.for_each([&](int v) {
                        if (v != y && v != yp && g.neighbors(v) != minus(Y, {v})) ok = false;
                    });
                    if (!ok) continue;
                    FamilyWitness w;
                    w.side_x = X;
                    w.side_y = Y;
                    w.x = x;
                    w.xp = xp;
                    w.y = y;
                    w.yp = yp;
                    return w;
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<FamilyWitness> recognize_g3(const Graph& g) {
    const int n = g.order();
    for (int x = 0; x < n; ++x) {
        const VertexSet& nx = g.neighbors(x);
        std::vector<int> nbrs = nx.to_vector();
        for (size_t i = 0; i < nbrs.size(); ++i)
            for (size_t j = i + 1; j < nbrs.size(); ++j) {
                int y = nbrs[i], yp = nbrs[j];
                if (g.has_edge(y, yp)) continue;  // yy' was deleted
                VertexSet X = minus(plus(nx, {x}), {y, yp});
                VertexSet Y = X.complement();
                const VertexSet& ny = g.neighbors(y);
                const VertexSet& nyp = g.neighbors(yp);
                if (nx != plus(minus(X, {x}), {y, yp})) continue;
                if (ny != plus(minus(Y, {y, yp}), {x})) continue;
                if (nyp != plus(minus(Y, {y, yp}), {x})) continue;
                bool ok = true;
                X.for_each([&](int v) {
                    if (v != x && g.neighbors(v) != minus(X, {v})) ok = false;
                });
                Y.for_each([&](int v) {
                    if (v != y && v != yp && g.neighbors(v) != minus(Y, {v})) ok = false;
                });
                if (!ok) continue;
                FamilyWitness w;
                w.side_x = X;
                w.side_y = Y;
                w.x = x;
                w.y = y;
                w.yp = yp;
                return w;
            }
    }
    return std::nullopt;
}

FamilyLabel classify_structural(const Graph& g) {
    FamilyLabel label;
    if (auto w = recognize_g0(g)) {
        label.kind = FamilyKind::G0;
        label.witness = std::move(w);
    } else if (auto w1 = recognize_g1(g)) {
        label.kind = FamilyKind::G1;
        label.witness = std::move(w1);
    } else if (auto w2 = recognize_g2(g)) {
        label.kind = FamilyKind::G2;
        label.witness = std::move(w2);
    } else if (auto w3 = recognize_g3(g)) {
        label.kind = FamilyKind::G3;
        label.witness = std::move(w3);
    }
    return label;
}

}  // namespace

XCorpus::XCorpus(std::vector<XEntry> entries, std::string provenance)
    : entries_(std::move(entries)), provenance_(std::move(provenance)) {}

int XCorpus::max_order() const {
    int m = 0;
    for (const XEntry& e : entries_) m = std::max(m, e.order);
    return m;
}

int XCorpus::find_canonical(const std::string& form) const {
    for (size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].canonical == form) return int(i);
    return -1;
}

std::string XCorpus::to_file_string() const {
    std::ostringstream out;
    std::istringstream prov(provenance_);
    std::string line;
    while (std::getline(prov, line)) out << "# " << line << "\n";
    for (const XEntry& e : entries_) out << e.graph6 << "\n";
    return out.str();
}

XCorpus XCorpus::parse(std::istream& in) {
    std::vector<XEntry> entries;
    std::string provenance;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            size_t start = line.find_first_not_of(" \t", 1);
            if (!provenance.empty()) provenance += '\n';
            if (start != std::string::npos) provenance += line.substr(start);
            continue;
        }
        Graph g;
        try {
            g = parse_graph6(line);
        } catch (const Graph6Error& e) {
            throw Graph6Error(e.kind(),
                              "corpus line " + std::to_string(line_no) + ": " + e.what());
        }
        XEntry entry;
        entry.order = g.order();
        entry.graph6 = line;
        entry.canonical = canonical_form(g);
        entries.push_back(std::move(entry));
    }
    return XCorpus(std::move(entries), std::move(provenance));
}

XCorpus load_x_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    return XCorpus::parse(in);
}

FamilyLabel classify_family(const Graph& g, const XCorpus& corpus) {
    if (g.order() > kClassifyOrderCap)
        throw std::invalid_argument("classify_family: order " + std::to_string(g.order()) +
                                    " exceeds the structural-search cap of " +
                                    std::to_string(kClassifyOrderCap));
    FamilyLabel label = classify_structural(g);
    if (label.kind != FamilyKind::None) return label;
    if (g.order() >= 1 && g.order() <= std::min(corpus.max_order(), kCanonicalOrderCap)) {
        int idx = corpus.find_canonical(canonical_form(g));
        if (idx >= 0) {
            label.kind = FamilyKind::X;
            label.corpus_index = idx;
        }
    }
    return label;
}

FamilyLabel classify_family(const Graph& g) { return classify_family(g, builtin_x_corpus()); }

namespace {

// The residual filter: sigma2 >= n-2, m(G,2) > 2 (equivalently: no
// contagious pair, since m is always exactly 2 or more here), and no
// G0-G3 structure.
bool x_filter(const Graph& g) {
    if (g.order() < 2) return false;
    if (!sigma2(g).at_least(g.order() - 2)) return false;
    if (m2_witness_pair(g).has_value()) return false;
    return classify_structural(g).kind == FamilyKind::None;
}

XCorpus finish_corpus(std::set<std::pair<int, std::string>> members, std::string provenance) {
    std::vector<XEntry> entries;
    for (const auto& [order, form] : members) entries.push_back({order, form, form});
    return XCorpus(std::move(entries), std::move(provenance));
}

}  // namespace

XCorpus derive_x(int max_n) {
    if (max_n < 1 || max_n > kEnumerateOrderCap)
        throw std::invalid_argument("derive_x: built-in enumeration covers orders 1.." +
                                    std::to_string(kEnumerateOrderCap) + ", got " +
                                    std::to_string(max_n));
    std::set<std::pair<int, std::string>> members;
    for (int n = 2; n <= max_n; ++n)
        enumerate_graphs(n, [&](const Graph& g) {
            if (x_filter(g)) members.insert({n, canonical_form(g)});
        });
    return finish_corpus(std::move(members),
                         "derived over built-in enumeration, orders <= " + std::to_string(max_n) +
                             "\nfilter: sigma2 >= n-2, m(G,2) > 2, not G0-G3");
}

XCorpus derive_x(int max_n, std::istream& graph6_lines) {
    std::set<std::pair<int, std::string>> members;
    std::string line;
    int line_no = 0;
    while (std::getline(graph6_lines, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        Graph g;
        try {
            g = parse_graph6(line);
        } catch (const Graph6Error& e) {
            throw Graph6Error(e.kind(), "line " + std::to_string(line_no) + ": " + e.what());
        }
        if (g.order() > max_n) continue;
        if (!x_filter(g)) continue;
        if (g.order() > kCanonicalOrderCap)
            throw std::invalid_argument("derive_x: line " + std::to_string(line_no) +
                                        " passes the filter at order " +
                                        std::to_string(g.order()) +
                                        ", beyond the canonical-form cap");
        members.insert({g.order(), canonical_form(g)});
    }
    return finish_corpus(std::move(members),
                         "derived over an ingested graph6 stream, orders <= " +
                             std::to_string(max_n) +
                             "\nfilter: sigma2 >= n-2, m(G,2) > 2, not G0-G3");
}

}  // namespace perckit
