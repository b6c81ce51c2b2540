#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "perckit/canonical.hpp"
#include "perckit/conditions.hpp"
#include "perckit/enumerate.hpp"
#include "perckit/families.hpp"
#include "perckit/graph.hpp"
#include "perckit/graph6.hpp"
#include "perckit/parallel.hpp"
#include "perckit/percolation.hpp"
#include "perckit/serialize.hpp"
#include "perckit/verify.hpp"

namespace {

using perckit::FieldValue;
using perckit::Graph;
using perckit::OutputRecord;

constexpr int kExitSuccess = 0;
constexpr int kExitCounterexamples = 1;
constexpr int kExitUsage = 2;

struct Options {
    int r = 2;
    std::string input = "-";
    std::string format = "jsonl";
    int parallel = 1;
    int enumerate_n = 0;
    std::string theorem;
    int max_n = 0;
    std::string seed;
    std::string output_file;
};

std::istream& open_input(const Options& opt, std::ifstream& file) {
    if (opt.input.empty() || opt.input == "-") return std::cin;
    file.open(opt.input);
    if (!file) throw std::runtime_error("cannot open input file: " + opt.input);
    return file;
}

// Renders records per --format; TSV gets a header row derived from the
// first record, summary mode uses the per-command one-liner.
struct Emitter {
    std::string format;
    std::function<std::string(const OutputRecord&)> summarize;
    bool header_done = false;

    void emit(const OutputRecord& rec) {
        if (format == "tsv") {
            if (!header_done) {
                std::cout << perckit::tsv_header(rec) << '\n';
                header_done = true;
            }
            std::cout << perckit::to_tsv_line(rec) << '\n' << std::flush;
        } else if (format == "summary") {
            if (summarize) std::cout << summarize(rec) << '\n' << std::flush;
        } else {
            std::cout << perckit::to_json_line(rec) << '\n' << std::flush;
        }
    }
};

const perckit::XCorpus& active_x_corpus() {
    static const perckit::XCorpus* corpus = []() -> const perckit::XCorpus* {
        const char* path = std::getenv("PERCKIT_X_CORPUS");
        if (path && *path) {
            static const perckit::XCorpus loaded = perckit::load_x_corpus(path);
            return &loaded;
        }
        return &perckit::builtin_x_corpus();
    }();
    return *corpus;
}

// Input lines with their numbers; skips blanks and '#' comments.
struct LineReader {
    std::istream& in;
    int line_no = 0;

    std::optional<std::pair<int, std::string>> next() {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            return std::make_pair(line_no, line);
        }
        return std::nullopt;
    }
};

Graph parse_graph_line(const std::pair<int, std::string>& numbered) {
    try {
        return perckit::parse_graph6(numbered.second);
    } catch (const perckit::Graph6Error& e) {
        throw perckit::Graph6Error(e.kind(), "line " + std::to_string(numbered.first) + ": " +
                                                 e.what());
    }
}

// Shared driver: one output record per input line, optionally in parallel
// with emission re-sorted to input order.
void map_lines(const Options& opt, Emitter& emitter,
               const std::function<OutputRecord(const std::pair<int, std::string>&)>& work) {
    std::ifstream file;
    std::istream& in = open_input(opt, file);
    LineReader reader{in};
    perckit::ordered_parallel_map<std::pair<int, std::string>, OutputRecord>(
        opt.parallel, [&] { return reader.next(); },
        [&](const std::pair<int, std::string>& line) {
            try {
                return work(line);
            } catch (const perckit::Graph6Error&) {
                throw;  // already carries the line number
            } catch (const std::exception& e) {
                throw std::runtime_error("line " + std::to_string(line.first) + ": " + e.what());
            }
        },
        [&](OutputRecord rec) { emitter.emit(rec); });
}

std::vector<int> parse_seed_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        size_t used = 0;
        int v;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::runtime_error("bad seed vertex '" + token + "'");
        }
        if (used != token.size()) throw std::runtime_error("bad seed vertex '" + token + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::runtime_error("seed list is empty");
    return out;
}

bool looks_like_degree_sequence(const std::string& line) {
    bool digit = false;
    for (char c : line) {
        if (c >= '0' && c <= '9')
            digit = true;
        else if (c != ',' && c != ' ')
            return false;
    }
    return digit;
}

int run_percolate(const Options& opt) {
    std::vector<int> seed_vertices = parse_seed_list(opt.seed);
    Emitter emitter{opt.format, [](const OutputRecord& rec) {
        std::ostringstream out;
        out << std::get<std::string>(rec.fields[0].second) << "  closure "
            << std::get<std::int64_t>(rec.fields[6].second) << "/"
            << std::get<std::int64_t>(rec.fields[1].second) << "  rounds "
            << std::get<std::int64_t>(rec.fields[7].second)
            << (std::get<bool>(rec.fields[8].second) ? "  contagious" : "");
        return out.str();
    }};
    map_lines(opt, emitter, [&](const std::pair<int, std::string>& line) {
        Graph g = parse_graph_line(line);
        perckit::VertexSet seed(g.order());
        for (int v : seed_vertices) {
            if (v < 0 || v >= g.order())
                throw std::runtime_error("seed vertex " + std::to_string(v) +
                                         " outside order " + std::to_string(g.order()));
            seed.insert(v);
        }
        return perckit::record_for_trace(line.second, perckit::percolate(g, seed, opt.r));
    });
    return kExitSuccess;
}

int run_msolve(const Options& opt) {
    Emitter emitter{opt.format, [](const OutputRecord& rec) {
        std::ostringstream out;
        out << std::get<std::string>(rec.fields[0].second) << "  m="
            << std::get<std::int64_t>(rec.fields[3].second);
        return out.str();
    }};
    map_lines(opt, emitter, [&](const std::pair<int, std::string>& line) {
        Graph g = parse_graph_line(line);
        return perckit::record_for_min_result(line.second, g.order(), opt.r,
                                              perckit::min_contagious(g, opt.r));
    });
    return kExitSuccess;
}

int run_conditions(const Options& opt) {
    Emitter emitter{opt.format, [](const OutputRecord& rec) {
        std::ostringstream out;
        for (size_t i = 0; i < rec.fields.size(); ++i) {
            if (i) out << ' ';
            out << rec.fields[i].first << '=' << perckit::to_tsv_line(OutputRecord{{rec.fields[i]}});
        }
        return out.str();
    }};
    map_lines(opt, emitter, [&](const std::pair<int, std::string>& line) {
        if (looks_like_degree_sequence(line.second))
            return perckit::record_for_sequence_conditions(
                perckit::parse_degree_sequence(line.second));
        Graph g = parse_graph_line(line);
        return perckit::record_for_conditions(line.second,
                                              perckit::evaluate_conditions(g, opt.r));
    });
    return kExitSuccess;
}

int run_classify(const Options& opt) {
    const perckit::XCorpus& corpus = active_x_corpus();
    Emitter emitter{opt.format, [](const OutputRecord& rec) {
        return std::get<std::string>(rec.fields[0].second) + "  " +
               std::get<std::string>(rec.fields[2].second);
    }};
    map_lines(opt, emitter, [&](const std::pair<int, std::string>& line) {
        Graph g = parse_graph_line(line);
        return perckit::record_for_family(line.second, g.order(),
                                          perckit::classify_family(g, corpus));
    });
    return kExitSuccess;
}

int run_realize(const Options& opt) {
    Emitter emitter{opt.format, [](const OutputRecord& rec) {
        const auto& graph6 = rec.fields[3].second;
        return std::get<bool>(rec.fields[2].second)
                   ? std::get<std::string>(graph6)
                   : std::string("not graphic");
    }};
    map_lines(opt, emitter, [&](const std::pair<int, std::string>& line) {
        perckit::DegreeSequence d = perckit::parse_degree_sequence(line.second);
        OutputRecord rec;
        rec.add("sequence", d.values());
        rec.add("n", std::int64_t(d.size()));
        bool graphic = perckit::is_graphic(d);
        rec.add("graphic", graphic);
        rec.add("graph6",
                graphic ? FieldValue(perckit::write_graph6(perckit::realize(d))) : FieldValue());
        return rec;
    });
    return kExitSuccess;
}

int run_enumerate(const Options& opt) {
    if (opt.enumerate_n < 1)
        throw CLI::ValidationError("enumerate", "--enumerate requires an order >= 1");
    std::int64_t count = 0;
    Emitter emitter{opt.format, nullptr};
    perckit::enumerate_graphs(opt.enumerate_n, [&](const Graph& g) {
        ++count;
        if (opt.format == "summary") return;
        OutputRecord rec;
        rec.add("graph6", perckit::write_graph6(g));
        rec.add("n", std::int64_t(g.order()));
        rec.add("edges", std::int64_t(g.edge_count()));
        emitter.emit(rec);
    });
    if (opt.format == "summary")
        std::cout << "order " << opt.enumerate_n << ": " << count << " graphs\n";
    return kExitSuccess;
}

int run_derive_x(const Options& opt, bool input_given) {
    perckit::XCorpus corpus;
    if (input_given) {
        std::ifstream file;
        std::istream& in = open_input(opt, file);
        corpus = perckit::derive_x(opt.max_n > 0 ? opt.max_n : 1024, in);
    } else {
        corpus = perckit::derive_x(opt.max_n > 0 ? opt.max_n : 8);
    }

    if (!opt.output_file.empty()) {
        std::ofstream out(opt.output_file);
        if (!out) throw std::runtime_error("cannot open output file: " + opt.output_file);
        out << corpus.to_file_string();
    }

    if (opt.format == "summary") {
        std::ostringstream orders;
        for (int i = 0; i < corpus.size(); ++i) {
            if (i) orders << ',';
            orders << corpus.entries()[size_t(i)].order;
        }
        std::cout << corpus.size() << " graphs, orders: " << orders.str() << '\n';
        return kExitSuccess;
    }
    Emitter emitter{opt.format, nullptr};
    for (const perckit::XEntry& e : corpus.entries()) {
        OutputRecord rec;
        rec.add("order", std::int64_t(e.order));
        rec.add("graph6", e.graph6);
        rec.add("canonical", e.canonical);
        emitter.emit(rec);
    }
    return kExitSuccess;
}

int run_verify(const Options& opt, bool enumerate_given) {
    std::optional<perckit::Theorem> theorem = perckit::theorem_from_string(opt.theorem);
    if (!theorem)
        throw CLI::ValidationError("verify", "unknown --theorem '" + opt.theorem +
                                                 "' (expect fpr, ore, chvatal, corollary)");
    const perckit::XCorpus& corpus = active_x_corpus();

    std::ifstream file;
    perckit::GraphSource source;
    if (enumerate_given) {
        source = perckit::enumeration_source(opt.enumerate_n);
    } else {
        std::istream& in = open_input(opt, file);
        source = perckit::graph6_stream_source(in, opt.max_n);
    }

    perckit::TheoremVerdict verdict;
    verdict.theorem = *theorem;
    Emitter emitter{opt.format, nullptr};
    perckit::ordered_parallel_map<Graph, perckit::GraphRecord>(
        opt.parallel, [&] { return source(); },
        [&](Graph g) { return perckit::check_theorem(*theorem, g, corpus); },
        [&](perckit::GraphRecord rec) {
            ++verdict.total;
            if (rec.hypothesis) ++verdict.hypothesis_count;
            if (!rec.exception.empty()) ++verdict.exception_count;
            if (rec.counterexample) verdict.counterexamples.push_back(rec);
            if (opt.format != "summary") emitter.emit(perckit::record_for_graph_record(rec));
        });

    OutputRecord summary = perckit::record_for_verdict(verdict);
    if (opt.format == "summary") {
        std::cout << "theorem " << perckit::to_string(verdict.theorem) << ": " << verdict.total
                  << " graphs, " << verdict.hypothesis_count << " hypothesis, "
                  << verdict.exception_count << " exceptions, "
                  << verdict.counterexamples.size() << " counterexamples -> "
                  << (verdict.pass() ? "PASS" : "FAIL") << '\n';
    } else if (opt.format == "tsv") {
        std::cout << "# " << perckit::tsv_header(summary) << '\n'
                  << "# " << perckit::to_tsv_line(summary) << '\n';
    } else {
        std::cout << perckit::to_json_line(summary) << '\n';
    }
    return verdict.pass() ? kExitSuccess : kExitCounterexamples;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bootstrap-percolation toolkit"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool with_r, bool with_parallel) {
        sub->add_option("--input", opt.input, "input file of graph6 lines, or - for stdin");
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"jsonl", "tsv", "summary"}));
        if (with_r) sub->add_option("--r", opt.r, "percolation threshold")->check(CLI::Range(1, 1024));
        if (with_parallel)
            sub->add_option("--parallel", opt.parallel, "worker threads")
                ->check(CLI::Range(1, 256));
    };

    CLI::App* percolate = app.add_subcommand("percolate", "run the percolation process");
    add_common(percolate, true, true);
    percolate->add_option("--seed", opt.seed, "comma-separated seed vertices")->required();

    CLI::App* msolve = app.add_subcommand("msolve", "exact minimum contagious sets");
    add_common(msolve, true, true);

    CLI::App* conditions =
        app.add_subcommand("conditions", "degree conditions per graph or degree sequence");
    add_common(conditions, true, true);

    CLI::App* classify = app.add_subcommand("classify", "exceptional-family recognition");
    add_common(classify, false, true);

    CLI::App* realize = app.add_subcommand("realize", "realize degree sequences");
    add_common(realize, false, true);

    CLI::App* enumerate = app.add_subcommand("enumerate", "isomorph-free graphs of one order");
    enumerate->add_option("--enumerate", opt.enumerate_n, "order to enumerate")
        ->required()
        ->check(CLI::Range(1, int(perckit::kEnumerateOrderCap)));
    enumerate->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"jsonl", "tsv", "summary"}));

    CLI::App* derive = app.add_subcommand("derive-x", "derive the exceptional corpus");
    add_common(derive, false, false);
    derive->add_option("--max-n", opt.max_n, "largest order to keep");
    derive->add_option("--output-file", opt.output_file, "also write the corpus file here");

    CLI::App* verify = app.add_subcommand("verify", "re-check a theorem over a corpus");
    add_common(verify, false, true);
    verify->add_option("--theorem", opt.theorem, "fpr | ore | chvatal | corollary")->required();
    verify->add_option("--enumerate", opt.enumerate_n, "use the built-in enumerator up to this order")
        ->check(CLI::Range(1, int(perckit::kEnumerateOrderCap)));
    verify->add_option("--max-n", opt.max_n, "drop larger graphs from an input stream");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    try {
        if (app.got_subcommand(percolate)) return run_percolate(opt);
        if (app.got_subcommand(msolve)) return run_msolve(opt);
        if (app.got_subcommand(conditions)) return run_conditions(opt);
        if (app.got_subcommand(classify)) return run_classify(opt);
        if (app.got_subcommand(realize)) return run_realize(opt);
        if (app.got_subcommand(enumerate)) return run_enumerate(opt);
        if (app.got_subcommand(derive)) return run_derive_x(opt, derive->count("--input") > 0);
        if (app.got_subcommand(verify))
            return run_verify(opt, verify->count("--enumerate") > 0);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
