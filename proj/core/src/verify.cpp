#include "perckit/verify.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <memory>
#include <random>
#include <stdexcept>

#include "perckit/canonical.hpp"
#include "perckit/enumerate.hpp"
#include "perckit/graph6.hpp"
#include "perckit/percolation.hpp"

namespace perckit {

std::string to_string(Theorem t) {
    switch (t) {
        case Theorem::Fpr: return "fpr";
        case Theorem::Ore: return "ore";
        case Theorem::Chvatal: return "chvatal";
        case Theorem::ChvatalCorollary: return "corollary";
    }
    return "fpr";
}

std::optional<Theorem> theorem_from_string(const std::string& name) {
    if (name == "fpr") return Theorem::Fpr;
    if (name == "ore") return Theorem::Ore;
    if (name == "chvatal") return Theorem::Chvatal;
    if (name == "corollary" || name == "chvatal-corollary") return Theorem::ChvatalCorollary;
    return std::nullopt;
}

GraphSource enumeration_source(int max_n) {
    if (max_n < 1 || max_n > kEnumerateOrderCap)
        throw std::invalid_argument("enumeration_source: max order must be in [1, " +
                                    std::to_string(kEnumerateOrderCap) + "], got " +
                                    std::to_string(max_n));
    struct State {
        int max_n;
        int n = 0;
        size_t pos = 0;
        std::vector<std::uint64_t> keys;
    };
    auto state = std::make_shared<State>();
    state->max_n = max_n;
    return [state]() -> std::optional<Graph> {
        while (state->pos >= state->keys.size()) {
            if (state->n >= state->max_n) return std::nullopt;
            ++state->n;
            state->keys = detail::enumerate_packed(state->n);
            state->pos = 0;
        }
        return detail::unpack_triangle(state->keys[state->pos++], state->n);
    };
}

GraphSource graph6_stream_source(std::istream& in, int max_n) {
    auto line_no = std::make_shared<int>(0);
    return [&in, line_no, max_n]() -> std::optional<Graph> {
        std::string line;
        while (std::getline(in, line)) {
            ++*line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            Graph g;
            try {
                g = parse_graph6(line);
            } catch (const Graph6Error& e) {
                throw Graph6Error(e.kind(),
                                  "line " + std::to_string(*line_no) + ": " + e.what());
            }
            if (max_n > 0 && g.order() > max_n) continue;
            return g;
        }
        return std::nullopt;
    };
}

namespace {

bool is_p2(const Graph& g) { return g.order() == 2 && g.edge_count() == 1; }

bool is_p3(const Graph& g) {
    return g.order() == 3 && g.edge_count() == 2 && components(g).size() == 1;
}

bool is_c5(const Graph& g) {
    if (g.order() != 5 || g.edge_count() != 5) return false;
    for (int v = 0; v < 5; ++v)
        if (g.degree(v) != 2) return false;
    return components(g).size() == 1;
}

std::string chvatal_exception(const Graph& g) {
    if (components(g).size() > 1) return "disconnected";
    int degree_one = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) ++degree_one;
    if (degree_one == 2 && !is_p2(g) && !is_p3(g)) return "two_degree_one";
    if (is_c5(g)) return "c5";
    return "";
}

}  // namespace

GraphRecord check_theorem(Theorem t, const Graph& g, const XCorpus& corpus) {
    GraphRecord rec;
    rec.graph6 = write_graph6(g);
    rec.order = g.order();
    const int n = g.order();
    if (n < 2) return rec;  // hypotheses concern graphs of order >= 2

    switch (t) {
        case Theorem::Fpr:
            rec.hypothesis = sigma2(g).at_least(n);
            break;
        case Theorem::Ore:
            rec.hypothesis = sigma2(g).at_least(n - 2);
            break;
        case Theorem::Chvatal:
            rec.hypothesis = weak_chvatal_condition(degree_sequence(g));
            break;
        case Theorem::ChvatalCorollary:
            rec.hypothesis = chvatal_condition(degree_sequence(g));
            break;
    }
    if (!rec.hypothesis) return rec;

    rec.conclusion = m2_witness_pair(g).has_value();
    if (rec.conclusion) return rec;

    switch (t) {
        case Theorem::Fpr:
        case Theorem::ChvatalCorollary:
            break;  // no exceptions allowed
        case Theorem::Ore: {
            FamilyLabel label = classify_family(g, corpus);
            if (label.kind != FamilyKind::None) {
                std::string name = to_string(label.kind);
                std::transform(name.begin(), name.end(), name.begin(),
                               [](unsigned char c) { return char(std::tolower(c)); });
                rec.exception = name;
            }
            break;
        }
        case Theorem::Chvatal:
            rec.exception = chvatal_exception(g);
            break;
    }
    rec.counterexample = rec.exception.empty();
    return rec;
}

TheoremVerdict verify_theorem(Theorem t, const GraphSource& source, const XCorpus& corpus,
                              const std::function<void(const GraphRecord&)>& sink) {
    TheoremVerdict verdict;
    verdict.theorem = t;
    while (std::optional<Graph> g = source()) {
        GraphRecord rec = check_theorem(t, *g, corpus);
        ++verdict.total;
        if (rec.hypothesis) ++verdict.hypothesis_count;
        if (!rec.exception.empty()) ++verdict.exception_count;
        if (rec.counterexample) verdict.counterexamples.push_back(rec);
        if (sink) sink(rec);
    }
    return verdict;
}

TheoremVerdict verify_fpr_theorem(const GraphSource& source) {
    return verify_theorem(Theorem::Fpr, source, builtin_x_corpus());
}

TheoremVerdict verify_ore_theorem(const GraphSource& source) {
    return verify_theorem(Theorem::Ore, source, builtin_x_corpus());
}

TheoremVerdict verify_chvatal_theorem(const GraphSource& source) {
    return verify_theorem(Theorem::Chvatal, source, builtin_x_corpus());
}

TheoremVerdict verify_chvatal_corollary(const GraphSource& source) {
    return verify_theorem(Theorem::ChvatalCorollary, source, builtin_x_corpus());
}

TheoremVerdict merge(TheoremVerdict a, const TheoremVerdict& b) {
    if (a.theorem != b.theorem)
        throw std::invalid_argument("merge: verdicts cover different theorems");
    a.total += b.total;
    a.hypothesis_count += b.hypothesis_count;
    a.exception_count += b.exception_count;
    a.counterexamples.insert(a.counterexamples.end(), b.counterexamples.begin(),
                             b.counterexamples.end());
    return a;
}

MonotoneReport verify_monotone_counterexample(int n, int i, bool weak, int samples,
                                              std::uint64_t seed) {
    MonotoneReport rep;
    rep.n = n;
    rep.i = i;
    rep.weak = weak;
    rep.samples = samples;
    rep.sequence = sharpness_sequence(n, i, weak);

    rep.fails_target_condition = weak ? !weak_chvatal_condition(rep.sequence)
                                      : !chvatal_condition(rep.sequence);
    rep.passes_weak_condition = weak_chvatal_condition(rep.sequence);
    rep.two_universal =
        std::count(rep.sequence.values().begin(), rep.sequence.values().end(), n - 1) >= 2;

    Graph join = make_join(make_complete(i), make_union(make_empty(i), make_complete(n - 2 * i)));
    rep.join_checked = !weak && n <= kCanonicalOrderCap;
    std::string join_form = rep.join_checked ? canonical_form(join) : std::string();

    std::mt19937_64 rng(seed);
    rep.all_m2 = true;
    rep.all_isomorphic_join = rep.join_checked;
    Graph base = realize(rep.sequence);
    for (int s = 0; s <= samples; ++s) {  // s = 0 is the plain realization
        Graph g = s == 0 ? base : edge_switch_randomize(base, rng);
        if (degree_sequence(g) != rep.sequence)
            throw std::logic_error("verify_monotone_counterexample: switch changed degrees");
        if (!m2_witness_pair(g).has_value()) rep.all_m2 = false;
        if (rep.join_checked && canonical_form(g) != join_form) rep.all_isomorphic_join = false;
    }
    rep.confirmed = rep.fails_target_condition && rep.two_universal && rep.all_m2;
    return rep;
}

}  // namespace perckit
