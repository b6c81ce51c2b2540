#include "perckit/conditions.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace perckit {

Sigma2 sigma2(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("sigma2: order must be >= 2");
    Sigma2 best{true, 0};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            int sum = g.degree(u) + g.degree(v);
            if (best.infinite || sum < best.value) best = {false, sum};
        }
    return best;
}

bool dirac_fpr(const Graph& g, int r) {
    if (r < 2) throw std::invalid_argument("dirac_fpr: threshold r must be >= 2");
    return std::int64_t(g.min_degree()) * r >= std::int64_t(r - 1) * g.order();
}

bool gunderson(const Graph& g, int r) {
    if (r < 3) throw std::invalid_argument("gunderson: threshold r must be >= 3");
    const int n = g.order();
    const int bound = r == 3 ? n / 2 + 1 : n / 2 + r - 3;
    return g.min_degree() >= bound;
}

bool gunderson_size_ok(int n, int r) {
    if (r < 3) throw std::invalid_argument("gunderson_size_ok: threshold r must be >= 3");
    return r == 3 && n >= 30;
}

namespace {

bool chvatal_like(const DegreeSequence& d, int second_slack) {
    const int n = d.size();
    for (int i = 1; 2 * i < n; ++i)
        if (d.at(i) < i + 1 && d.at(n - i) < n - i - second_slack) return false;
    return true;
}

}  // namespace

bool chvatal_condition(const DegreeSequence& d) { return chvatal_like(d, 0); }

bool weak_chvatal_condition(const DegreeSequence& d) { return chvatal_like(d, 1); }

bool is_graphic(const DegreeSequence& d) {
    const int n = d.size();
    if (d.sum() % 2 != 0) return false;
    // Erdos-Gallai over the descending sequence
    std::vector<int> desc(d.values().rbegin(), d.values().rend());
    std::int64_t head = 0;
    for (int k = 1; k <= n; ++k) {
        head += desc[size_t(k - 1)];
        std::int64_t tail = 0;
        for (int i = k; i < n; ++i) tail += std::min(desc[size_t(i)], k);
        if (head > std::int64_t(k) * (k - 1) + tail) return false;
    }
    return true;
}

Graph realize(const DegreeSequence& d) {
    if (!is_graphic(d)) throw std::invalid_argument("realize: sequence is not graphic");
    const int n = d.size();
    Graph g(n);
    std::vector<int> residual(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) residual[size_t(v)] = d.at(v + 1);

    auto later = [&](int a, int b) {  // does b outrank a?
        return residual[size_t(b)] > residual[size_t(a)] ||
               (residual[size_t(b)] == residual[size_t(a)] && b < a);
    };
    for (;;) {
        int v = 0;
        for (int u = 1; u < n; ++u)
            if (later(v, u)) v = u;
        if (residual[size_t(v)] == 0) break;

        std::vector<int> others;
        for (int u = 0; u < n; ++u)
            if (u != v) others.push_back(u);
        std::stable_sort(others.begin(), others.end(),
                         [&](int a, int b) { return residual[size_t(b)] < residual[size_t(a)]; });
        int need = residual[size_t(v)];
        residual[size_t(v)] = 0;
        for (int idx = 0; idx < need; ++idx) {
            int u = others[size_t(idx)];
            if (residual[size_t(u)] == 0)
                throw std::logic_error("realize: residual exhausted on a graphic sequence");
            g.add_edge(v, u);
            --residual[size_t(u)];
        }
    }
    return g;
}

bool majorizes(const DegreeSequence& s, const DegreeSequence& t) {
    if (s.size() != t.size())
        throw std::invalid_argument("majorizes: sequence lengths differ (" +
                                    std::to_string(s.size()) + " vs " + std::to_string(t.size()) +
                                    ")");
    for (int i = 1; i <= s.size(); ++i)
        if (s.at(i) < t.at(i)) return false;
    return true;
}

DegreeSequence sharpness_sequence(int n, int i, bool weak) {
    if (i < 2 || 2 * i >= n)
        throw std::invalid_argument("sharpness_sequence: need 2 <= i < n/2");
    if (weak && n % 2 != 0)
        throw std::invalid_argument("sharpness_sequence: weak variant needs even n");
    std::vector<int> values;
    values.insert(values.end(), size_t(i), i);
    values.insert(values.end(), size_t(n - 2 * i), n - i - 1 - (weak ? 1 : 0));
    values.insert(values.end(), size_t(i), n - 1);
    return DegreeSequence(std::move(values));
}

Graph edge_switch_randomize(const Graph& g, std::mt19937_64& rng) {
    Graph h = g;
    std::vector<std::pair<int, int>> edges = h.edges();
    if (edges.size() < 2) return h;
    std::uniform_int_distribution<size_t> pick(0, edges.size() - 1);
    std::uniform_int_distribution<int> flip(0, 1);
    const size_t attempts = 10 * edges.size();
    for (size_t t = 0; t < attempts; ++t) {
        size_t ei = pick(rng), ej = pick(rng);
        if (ei == ej) continue;
        auto [a, b] = edges[ei];
        auto [c, d] = edges[ej];
        if (flip(rng)) std::swap(c, d);
        // (a,b),(c,d) -> (a,d),(c,b)
        if (a == c || a == d || b == c || b == d) continue;
        if (h.has_edge(a, d) || h.has_edge(c, b)) continue;
        h.remove_edge(a, b);
        h.remove_edge(c, d);
        h.add_edge(a, d);
        h.add_edge(c, b);
        edges[ei] = {a, d};
        edges[ej] = {c, b};
    }
    return h;
}

ConditionReport evaluate_conditions(const Graph& g, int r) {
    ConditionReport rep;
    rep.n = g.order();
    rep.r = r;
    rep.sigma2 = sigma2(g);
    rep.min_degree = g.min_degree();
    rep.ore_n = rep.sigma2.at_least(rep.n);
    rep.ore_n_minus_2 = rep.sigma2.at_least(rep.n - 2);
    rep.dirac_fpr = r >= 2 && dirac_fpr(g, r);
    rep.gunderson = r >= 3 && gunderson(g, r);
    rep.gunderson_size_ok = r >= 3 && gunderson_size_ok(rep.n, r);
    DegreeSequence d = degree_sequence(g);
    rep.chvatal = chvatal_condition(d);
    rep.weak_chvatal = weak_chvatal_condition(d);
    return rep;
}

DegreeSequence parse_degree_sequence(const std::string& text) {
    std::vector<int> values;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string token = text.substr(pos, comma - pos);
        size_t used = 0;
        int value;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("degree sequence: bad token '" + token + "'");
        }
        if (used != token.size())
            throw std::invalid_argument("degree sequence: bad token '" + token + "'");
        values.push_back(value);
        pos = comma + 1;
    }
    return DegreeSequence(std::move(values));
}

}  // namespace perckit
