#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "perckit/canonical.hpp"
#include "perckit/conditions.hpp"
#include "perckit/enumerate.hpp"
#include "perckit/families.hpp"
#include "perckit/graph.hpp"
#include "perckit/graph6.hpp"
#include "perckit/percolation.hpp"
#include "perckit/verify.hpp"
#include "support.hpp"

using namespace perckit;

TEST_CASE("theorem names round trip") {
    for (Theorem t : {Theorem::Fpr, Theorem::Ore, Theorem::Chvatal, Theorem::ChvatalCorollary})
        CHECK(theorem_from_string(to_string(t)) == t);
    CHECK(theorem_from_string("ore") == Theorem::Ore);
    CHECK(theorem_from_string("corollary") == Theorem::ChvatalCorollary);
    CHECK(!theorem_from_string("nope").has_value());
}

TEST_CASE("enumeration source yields each order once") {
    GraphSource source = enumeration_source(5);
    int count = 0;
    int last_order = 1;
    while (auto g = source()) {
        CHECK(g->order() >= last_order);
        last_order = g->order();
        ++count;
    }
    CHECK(count == 1 + 2 + 4 + 11 + 34);
    CHECK(!source().has_value());
    CHECK_THROWS_AS(enumeration_source(0), std::invalid_argument);
}

TEST_CASE("graph6 stream source filters and reports line numbers") {
    std::istringstream in("# comment\nDqK\n\nC~\nGsXPGs\n");
    GraphSource source = graph6_stream_source(in, 6);
    auto first = source();
    REQUIRE(first.has_value());
    CHECK(first->order() == 5);
    auto second = source();
    REQUIRE(second.has_value());
    CHECK(second->order() == 4);
    CHECK(!source().has_value());  // order 8 dropped by the cap

    std::istringstream bad("DqK\nboom\n");
    GraphSource bad_source = graph6_stream_source(bad);
    CHECK(bad_source().has_value());
    try {
        bad_source();
        FAIL("expected Graph6Error");
    } catch (const Graph6Error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("check_theorem on pinned graphs") {
    const XCorpus& corpus = builtin_x_corpus();

    GraphRecord c5 = check_theorem(Theorem::Ore, make_cycle(5), corpus);
    CHECK(c5.hypothesis);
    CHECK(!c5.conclusion);
    CHECK(c5.exception == "x");
    CHECK(!c5.counterexample);

    GraphRecord two_k2 =
        check_theorem(Theorem::Ore, make_union(make_complete(2), make_complete(2)), corpus);
    CHECK(two_k2.hypothesis);
    CHECK(two_k2.exception == "g0");

    GraphRecord p4 = check_theorem(Theorem::Ore, make_path(4), corpus);
    CHECK(p4.hypothesis);
    CHECK(p4.exception == "g1");

    GraphRecord k4 = check_theorem(Theorem::Ore, make_complete(4), corpus);
    CHECK(k4.hypothesis);
    CHECK(k4.conclusion);
    CHECK(k4.exception.empty());

    GraphRecord c6 = check_theorem(Theorem::Ore, make_cycle(6), corpus);
    CHECK(c6.hypothesis);
    CHECK(c6.exception == "g2");

    // Order below two never satisfies a hypothesis.
    GraphRecord k1 = check_theorem(Theorem::Ore, make_complete(1), corpus);
    CHECK(!k1.hypothesis);
    CHECK(!k1.counterexample);
    CHECK(!check_theorem(Theorem::Chvatal, make_complete(1), corpus).hypothesis);

    GraphRecord chv_c5 = check_theorem(Theorem::Chvatal, make_cycle(5), corpus);
    CHECK(chv_c5.hypothesis);
    CHECK(chv_c5.exception == "c5");

    GraphRecord chv_p4 = check_theorem(Theorem::Chvatal, make_path(4), corpus);
    CHECK(chv_p4.hypothesis);
    CHECK(chv_p4.exception == "two_degree_one");

    GraphRecord chv_p2 = check_theorem(Theorem::Chvatal, make_path(2), corpus);
    CHECK(chv_p2.hypothesis);
    CHECK(chv_p2.conclusion);
    CHECK(chv_p2.exception.empty());

    Graph disconnected = make_union(make_complete(3), make_complete(3));
    DegreeSequence d = degree_sequence(disconnected);
    REQUIRE(!weak_chvatal_condition(d));  // hypothesis fails; record reflects it
    GraphRecord chv_dis = check_theorem(Theorem::Chvatal, disconnected, corpus);
    CHECK(!chv_dis.hypothesis);

    GraphRecord fpr_c4 = check_theorem(Theorem::Fpr, make_cycle(4), corpus);
    CHECK(fpr_c4.hypothesis);
    CHECK(fpr_c4.conclusion);

    GraphRecord cor_k4 = check_theorem(Theorem::ChvatalCorollary, make_complete(4), corpus);
    CHECK(cor_k4.hypothesis);
    CHECK(cor_k4.conclusion);
}

TEST_CASE("record fields are internally consistent at order 6") {
    const XCorpus& corpus = builtin_x_corpus();
    for (const Graph& g : all_graphs(6)) {
        for (Theorem t :
             {Theorem::Fpr, Theorem::Ore, Theorem::Chvatal, Theorem::ChvatalCorollary}) {
            GraphRecord rec = check_theorem(t, g, corpus);
            CHECK(rec.order == 6);
            CHECK(parse_graph6(rec.graph6) == g);
            // conclusion is only evaluated once the hypothesis holds
            if (rec.hypothesis)
                CHECK(rec.conclusion == (min_contagious(g, 2).m == 2));
            else
                CHECK(!rec.conclusion);
            CHECK(rec.counterexample ==
                  (rec.hypothesis && !rec.conclusion && rec.exception.empty()));
            if (!rec.hypothesis) CHECK(rec.exception.empty());
            if (t == Theorem::Ore && rec.hypothesis)
                CHECK(sigma2(g).at_least(4));
            if (t == Theorem::Chvatal && rec.exception == "disconnected")
                CHECK(components(g).size() > 1);
            if (t == Theorem::Chvatal && rec.exception == "two_degree_one") {
                int ones = 0;
                for (int v = 0; v < 6; ++v)
                    if (g.degree(v) == 1) ++ones;
                CHECK(ones == 2);
            }
        }
    }
}

TEST_CASE("all four theorems verify exhaustively through order 7") {
    const XCorpus& corpus = builtin_x_corpus();
    const std::int64_t total = 1 + 2 + 4 + 11 + 34 + 156 + 1044;

    TheoremVerdict ore = verify_ore_theorem(enumeration_source(7));
    CHECK(ore.pass());
    CHECK(ore.total == total);
    CHECK(ore.theorem == Theorem::Ore);
    CHECK(ore.exception_count > 0);

    TheoremVerdict chv = verify_chvatal_theorem(enumeration_source(7));
    CHECK(chv.pass());
    CHECK(chv.total == total);

    TheoremVerdict cor = verify_chvatal_corollary(enumeration_source(7));
    CHECK(cor.pass());
    CHECK(cor.exception_count == 0);

    TheoremVerdict fpr = verify_fpr_theorem(enumeration_source(7));
    CHECK(fpr.pass());
    CHECK(fpr.exception_count == 0);
    CHECK(fpr.hypothesis_count > 0);

    // The generic driver and the named wrappers agree.
    TheoremVerdict again = verify_theorem(Theorem::Ore, enumeration_source(7), corpus);
    CHECK(again.total == ore.total);
    CHECK(again.hypothesis_count == ore.hypothesis_count);
    CHECK(again.exception_count == ore.exception_count);
    CHECK(again.counterexamples.size() == ore.counterexamples.size());
}

TEST_CASE("verify_theorem streams records through the sink in order") {
    const XCorpus& corpus = builtin_x_corpus();
    std::vector<std::string> seen;
    TheoremVerdict verdict =
        verify_theorem(Theorem::Ore, enumeration_source(4), corpus,
                       [&](const GraphRecord& rec) { seen.push_back(rec.graph6); });
    CHECK(std::int64_t(seen.size()) == verdict.total);

    std::vector<std::string> expected;
    GraphSource source = enumeration_source(4);
    while (auto g = source()) expected.push_back(write_graph6(*g));
    CHECK(seen == expected);
}

TEST_CASE("a hostile corpus surfaces counterexamples instead of hiding them") {
    // With the X corpus emptied, C5 has no family to absorb it.
    TheoremVerdict verdict = verify_theorem(Theorem::Ore, enumeration_source(5), XCorpus());
    CHECK(!verdict.pass());
    REQUIRE(verdict.counterexamples.size() == 1);
    CHECK(are_isomorphic(parse_graph6(verdict.counterexamples[0].graph6), make_cycle(5)));
    CHECK(verdict.counterexamples[0].counterexample);
}

TEST_CASE("merge combines verdicts") {
    std::ostringstream small, large;
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : all_graphs(n)) small << write_graph6(g) << '\n';
    for (const Graph& g : all_graphs(5)) large << write_graph6(g) << '\n';

    std::istringstream small_in(small.str()), large_in(large.str());
    TheoremVerdict a = verify_ore_theorem(graph6_stream_source(small_in));
    TheoremVerdict b = verify_ore_theorem(graph6_stream_source(large_in));
    TheoremVerdict both = merge(a, b);
    TheoremVerdict direct = verify_ore_theorem(enumeration_source(5));
    CHECK(both.total == direct.total);
    CHECK(both.hypothesis_count == direct.hypothesis_count);
    CHECK(both.exception_count == direct.exception_count);
    CHECK(both.counterexamples.size() == direct.counterexamples.size());

    TheoremVerdict fpr = verify_fpr_theorem(enumeration_source(3));
    CHECK_THROWS_AS(merge(a, fpr), std::invalid_argument);
}

TEST_CASE("monotone sharpness reports for the target orders") {
    for (int i : {2, 3}) {
        MonotoneReport strict = verify_monotone_counterexample(12, i, false);
        CHECK(strict.n == 12);
        CHECK(strict.i == i);
        CHECK(strict.fails_target_condition);
        CHECK(strict.passes_weak_condition);
        CHECK(strict.two_universal);
        CHECK(strict.samples > 0);
        CHECK(strict.all_m2);
        CHECK(strict.join_checked);
        CHECK(strict.all_isomorphic_join);
        CHECK(strict.confirmed);
        CHECK(strict.sequence.values() == sharpness_sequence(12, i, false).values());

        MonotoneReport weak = verify_monotone_counterexample(12, i, true);
        CHECK(weak.fails_target_condition);
        CHECK(weak.two_universal);
        CHECK(weak.all_m2);
        CHECK(weak.confirmed);
    }
}

TEST_CASE("monotone reports are deterministic in the seed") {
    MonotoneReport a = verify_monotone_counterexample(10, 2, false, 40, 7);
    MonotoneReport b = verify_monotone_counterexample(10, 2, false, 40, 7);
    CHECK(a.confirmed == b.confirmed);
    CHECK(a.samples == b.samples);
    CHECK(a.sequence.values() == b.sequence.values());
}
