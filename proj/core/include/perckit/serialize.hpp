#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "perckit/conditions.hpp"
#include "perckit/families.hpp"
#include "perckit/percolation.hpp"
#include "perckit/verify.hpp"

namespace perckit {

// Flat output records with a fixed field order, rendered as one JSON
// object per line or as tab-separated columns (same order).

using FieldValue = std::variant<std::monostate, bool, std::int64_t, std::string,
                                std::vector<int>, std::vector<std::vector<int>>>;

struct OutputRecord {
    std::vector<std::pair<std::string, FieldValue>> fields;

    void add(std::string key, FieldValue value) {
        fields.emplace_back(std::move(key), std::move(value));
    }
};

std::string to_json_line(const OutputRecord& record);

// Unset values render as "-"; integer lists as comma-joined digits;
// nested lists join groups with ';'.
std::string to_tsv_line(const OutputRecord& record);
std::string tsv_header(const OutputRecord& record);

// Record builders shared by the CLI and tests.
OutputRecord record_for_trace(const std::string& graph6, const PercolationTrace& trace);
OutputRecord record_for_min_result(const std::string& graph6, int order, int r,
                                   const MinContagiousResult& result);
OutputRecord record_for_conditions(const std::string& graph6, const ConditionReport& report);
OutputRecord record_for_sequence_conditions(const DegreeSequence& d);
OutputRecord record_for_family(const std::string& graph6, int order, const FamilyLabel& label);
OutputRecord record_for_graph_record(const GraphRecord& record);
OutputRecord record_for_verdict(const TheoremVerdict& verdict);
OutputRecord record_for_monotone(const MonotoneReport& report);

}  // namespace perckit
