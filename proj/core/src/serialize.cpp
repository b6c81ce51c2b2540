#include "perckit/serialize.hpp"

#include <sstream>

#include <json.hpp>

namespace perckit {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json_value(const FieldValue& value) {
    return std::visit(
        [](const auto& v) -> ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>)
                return nullptr;
            else
                return v;
        },
        value);
}

std::string join_ints(const std::vector<int>& values, char sep) {
    std::ostringstream out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out << sep;
        out << values[i];
    }
    return out.str();
}

std::string to_tsv_value(const FieldValue& value) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return "-";
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, std::string>) {
                return v.empty() ? "-" : v;
            } else if constexpr (std::is_same_v<T, std::vector<int>>) {
                return join_ints(v, ',');
            } else {
                std::ostringstream out;
                for (size_t i = 0; i < v.size(); ++i) {
                    if (i) out << ';';
                    out << join_ints(v[i], ',');
                }
                return out.str();
            }
        },
        value);
}

}  // namespace

std::string to_json_line(const OutputRecord& record) {
    ordered_json obj = ordered_json::object();
    for (const auto& [key, value] : record.fields) obj[key] = to_json_value(value);
    return obj.dump();
}

std::string to_tsv_line(const OutputRecord& record) {
    std::ostringstream out;
    for (size_t i = 0; i < record.fields.size(); ++i) {
        if (i) out << '\t';
        out << to_tsv_value(record.fields[i].second);
    }
    return out.str();
}

std::string tsv_header(const OutputRecord& record) {
    std::ostringstream out;
    for (size_t i = 0; i < record.fields.size(); ++i) {
        if (i) out << '\t';
        out << record.fields[i].first;
    }
    return out.str();
}

namespace {

std::vector<std::vector<int>> rounds_as_lists(const PercolationTrace& trace) {
    std::vector<std::vector<int>> rounds;
    rounds.reserve(trace.rounds.size());
    for (const VertexSet& s : trace.rounds) rounds.push_back(s.to_vector());
    return rounds;
}

}  // namespace

OutputRecord record_for_trace(const std::string& graph6, const PercolationTrace& trace) {
    OutputRecord rec;
    rec.add("graph6", graph6);
    rec.add("n", std::int64_t(trace.rounds.front().ambient_size()));
    rec.add("r", std::int64_t(trace.r));
    rec.add("seed", trace.rounds.front().to_vector());
    rec.add("rounds", rounds_as_lists(trace));
    rec.add("closure", trace.closure().to_vector());
    rec.add("closure_size", std::int64_t(trace.closure().count()));
    rec.add("activation_rounds", std::int64_t(trace.activation_rounds()));
    rec.add("contagious",
            trace.closure().count() == trace.closure().ambient_size());
    return rec;
}

OutputRecord record_for_min_result(const std::string& graph6, int order, int r,
                                   const MinContagiousResult& result) {
    OutputRecord rec;
    rec.add("graph6", graph6);
    rec.add("n", std::int64_t(order));
    rec.add("r", std::int64_t(r));
    rec.add("m", std::int64_t(result.m));
    rec.add("witness", result.witness.to_vector());
    rec.add("exact", result.exact);
    return rec;
}

OutputRecord record_for_conditions(const std::string& graph6, const ConditionReport& report) {
    OutputRecord rec;
    rec.add("graph6", graph6);
    rec.add("n", std::int64_t(report.n));
    rec.add("r", std::int64_t(report.r));
    if (report.sigma2.infinite)
        rec.add("sigma2", std::string("Infinite"));
    else
        rec.add("sigma2", std::int64_t(report.sigma2.value));
    rec.add("min_degree", std::int64_t(report.min_degree));
    rec.add("ore_n", report.ore_n);
    rec.add("ore_n_minus_2", report.ore_n_minus_2);
    rec.add("dirac_fpr", report.dirac_fpr);
    rec.add("gunderson", report.gunderson);
    rec.add("gunderson_size_ok", report.gunderson_size_ok);
    rec.add("chvatal", report.chvatal);
    rec.add("weak_chvatal", report.weak_chvatal);
    return rec;
}

OutputRecord record_for_sequence_conditions(const DegreeSequence& d) {
    OutputRecord rec;
    rec.add("sequence", d.values());
    rec.add("n", std::int64_t(d.size()));
    rec.add("chvatal", chvatal_condition(d));
    rec.add("weak_chvatal", weak_chvatal_condition(d));
    rec.add("graphic", is_graphic(d));
    return rec;
}

OutputRecord record_for_family(const std::string& graph6, int order, const FamilyLabel& label) {
    OutputRecord rec;
    rec.add("graph6", graph6);
    rec.add("n", std::int64_t(order));
    rec.add("kind", to_string(label.kind));
    if (label.witness) {
        const FamilyWitness& w = *label.witness;
        rec.add("side_x", w.side_x.to_vector());
        rec.add("side_y", w.side_y.to_vector());
        rec.add("x", w.x >= 0 ? FieldValue(std::int64_t(w.x)) : FieldValue());
        rec.add("xp", w.xp >= 0 ? FieldValue(std::int64_t(w.xp)) : FieldValue());
        rec.add("y", w.y >= 0 ? FieldValue(std::int64_t(w.y)) : FieldValue());
        rec.add("yp", w.yp >= 0 ? FieldValue(std::int64_t(w.yp)) : FieldValue());
    } else {
        rec.add("side_x", FieldValue());
        rec.add("side_y", FieldValue());
        rec.add("x", FieldValue());
        rec.add("xp", FieldValue());
        rec.add("y", FieldValue());
        rec.add("yp", FieldValue());
    }
    rec.add("corpus_index",
            label.corpus_index >= 0 ? FieldValue(std::int64_t(label.corpus_index)) : FieldValue());
    return rec;
}

OutputRecord record_for_graph_record(const GraphRecord& record) {
    OutputRecord rec;
    rec.add("graph6", record.graph6);
    rec.add("n", std::int64_t(record.order));
    rec.add("hypothesis", record.hypothesis);
    rec.add("conclusion", record.conclusion);
    rec.add("exception", record.exception);
    rec.add("counterexample", record.counterexample);
    return rec;
}

OutputRecord record_for_verdict(const TheoremVerdict& verdict) {
    OutputRecord rec;
    rec.add("theorem", to_string(verdict.theorem));
    rec.add("total", verdict.total);
    rec.add("hypothesis_count", verdict.hypothesis_count);
    rec.add("exception_count", verdict.exception_count);
    rec.add("counterexample_count", std::int64_t(verdict.counterexamples.size()));
    rec.add("pass", verdict.pass());
    return rec;
}

OutputRecord record_for_monotone(const MonotoneReport& report) {
    OutputRecord rec;
    rec.add("n", std::int64_t(report.n));
    rec.add("i", std::int64_t(report.i));
    rec.add("weak", report.weak);
    rec.add("sequence", report.sequence.values());
    rec.add("fails_target_condition", report.fails_target_condition);
    rec.add("passes_weak_condition", report.passes_weak_condition);
    rec.add("two_universal", report.two_universal);
    rec.add("samples", std::int64_t(report.samples));
    rec.add("all_m2", report.all_m2);
    rec.add("join_checked", report.join_checked);
    rec.add("all_isomorphic_join", report.all_isomorphic_join);
    rec.add("confirmed", report.confirmed);
    return rec;
}

}  // namespace perckit
