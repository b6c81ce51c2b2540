#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "perckit/conditions.hpp"
#include "perckit/enumerate.hpp"
#include "perckit/families.hpp"
#include "perckit/graph.hpp"
#include "perckit/percolation.hpp"
#include "support.hpp"

using namespace perckit;

TEST_CASE("sigma2 values") {
    CHECK(sigma2(make_complete(4)).infinite);
    CHECK(sigma2(make_complete(2)).infinite);
    CHECK(sigma2(make_complete(4)).to_string() == "Infinite");
    CHECK(sigma2(make_complete(4)).at_least(1000));

    Sigma2 p4 = sigma2(make_path(4));
    CHECK(!p4.infinite);
    CHECK(p4.value == 2);
    CHECK(p4.at_least(2));
    CHECK(!p4.at_least(3));

    CHECK(sigma2(make_cycle(5)).value == 4);
    CHECK(sigma2(make_empty(3)).value == 0);

    Graph nearly = make_complete(6);
    nearly.remove_edge(1, 4);
    CHECK(sigma2(nearly).value == 8);

    CHECK_THROWS_AS(sigma2(Graph(1)), std::invalid_argument);
}

TEST_CASE("sigma2 equals the brute-force minimum over non-adjacent pairs") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + int(rng() % 9);
        Graph g = support::gnp(n, 0.5, rng);
        int best = -1;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (g.has_edge(u, v)) continue;
                int sum = g.degree(u) + g.degree(v);
                if (best < 0 || sum < best) best = sum;
            }
        Sigma2 s = sigma2(g);
        if (best < 0)
            CHECK(s.infinite);
        else
            CHECK(s == Sigma2{false, best});
    }
}

TEST_CASE("dirac_fpr threshold arithmetic") {
    CHECK(dirac_fpr(make_complete(4), 2));
    CHECK(dirac_fpr(make_cycle(4), 2));      // 2*2 >= 4
    CHECK(!dirac_fpr(make_cycle(5), 2));     // 2*2 < 5
    CHECK(!dirac_fpr(make_path(4), 2));
    CHECK(dirac_fpr(make_complete(5), 3));   // 4*3 >= 2*5
    CHECK(!dirac_fpr(make_cycle(6), 3));     // 2*3 < 2*6
    CHECK_THROWS_AS(dirac_fpr(make_complete(3), 1), std::invalid_argument);

    // Exact rational comparison: delta*r >= (r-1)*n with no rounding slack.
    Graph g = make_join(make_complete(3), make_empty(2));  // n=5, delta=3
    CHECK(dirac_fpr(g, 2));                                // 3*2 >= 5
    Graph h = make_join(make_complete(2), make_empty(3));  // n=5, delta=2
    CHECK(!dirac_fpr(h, 2));                               // 2*2 < 5
}

TEST_CASE("gunderson thresholds and size guard") {
    Graph ok = make_join(make_complete(16), make_empty(14));  // n=30, delta=16
    CHECK(gunderson(ok, 3));
    Graph low = make_join(make_complete(15), make_empty(15));  // n=30, delta=15
    CHECK(!gunderson(low, 3));

    // r = 4 needs floor(n/2) + 1 on 30 vertices.
    CHECK(gunderson(ok, 4));
    CHECK(!gunderson(low, 4));
    // r = 5 needs floor(n/2) + 2.
    CHECK(!gunderson(ok, 5));
    Graph high = make_join(make_complete(17), make_empty(13));  // delta=17
    CHECK(gunderson(high, 5));

    CHECK(gunderson_size_ok(30, 3));
    CHECK(!gunderson_size_ok(29, 3));
    CHECK(!gunderson_size_ok(1000, 4));
    CHECK_THROWS_AS(gunderson(ok, 2), std::invalid_argument);
}

TEST_CASE("Chvatal and weak Chvatal on known sequences") {
    CHECK(chvatal_condition(DegreeSequence(std::vector<int>{2, 2, 2})));
    CHECK(chvatal_condition(DegreeSequence(std::vector<int>{3, 3, 3, 3})));
    CHECK(!chvatal_condition(DegreeSequence(std::vector<int>{2, 2, 2, 2, 2})));
    CHECK(weak_chvatal_condition(DegreeSequence(std::vector<int>{2, 2, 2, 2, 2})));
    CHECK(!chvatal_condition(DegreeSequence(std::vector<int>{1, 1, 2, 2})));
    CHECK(weak_chvatal_condition(DegreeSequence(std::vector<int>{1, 1, 2, 2})));
    CHECK(!weak_chvatal_condition(DegreeSequence(std::vector<int>{1, 1, 1, 3})));
    CHECK(!weak_chvatal_condition(DegreeSequence(std::vector<int>{0, 0, 0})));

    // Orders up to 2 are vacuous.
    CHECK(chvatal_condition(DegreeSequence(std::vector<int>{0})));
    CHECK(chvatal_condition(DegreeSequence(std::vector<int>{0, 0})));
    CHECK(weak_chvatal_condition(DegreeSequence(std::vector<int>{1, 1})));
}

TEST_CASE("Chvatal implies weak Chvatal") {
    for (int n = 3; n <= 6; ++n) {
        for (const std::vector<int>& deg : support::oracle_graphic_multisets(n)) {
            DegreeSequence d(deg);
            if (chvatal_condition(d)) CHECK(weak_chvatal_condition(d));
        }
    }
}

TEST_CASE("conditions are monotone under majorization") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + int(rng() % 6);
        std::vector<int> low(static_cast<size_t>(n)), high(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            low[size_t(i)] = int(rng() % n);
            high[size_t(i)] = low[size_t(i)] + int(rng() % (n - low[size_t(i)]));
        }
        DegreeSequence t(low), s(high);
        REQUIRE(majorizes(s, t));
        if (chvatal_condition(t)) CHECK(chvatal_condition(s));
        if (weak_chvatal_condition(t)) CHECK(weak_chvatal_condition(s));
    }
    CHECK(majorizes(DegreeSequence(std::vector<int>{2, 2, 2}),
                    DegreeSequence(std::vector<int>{1, 2, 2})));
    CHECK(!majorizes(DegreeSequence(std::vector<int>{1, 2, 2}),
                     DegreeSequence(std::vector<int>{2, 2, 2})));
    CHECK_THROWS_AS(majorizes(DegreeSequence(std::vector<int>{1, 1}),
                              DegreeSequence(std::vector<int>{0})),
                    std::invalid_argument);
}

TEST_CASE("is_graphic matches the labeled-graph oracle") {
    for (int n = 1; n <= 6; ++n) {
        const auto& graphic = support::oracle_graphic_multisets(n);
        // Walk every sorted multiset over {0..n-1}.
        std::vector<int> deg(size_t(n), 0);
        while (true) {
            CHECK(is_graphic(DegreeSequence(deg)) == (graphic.count(deg) > 0));
            int i = n - 1;
            while (i >= 0 && deg[size_t(i)] == n - 1) --i;
            if (i < 0) break;
            int v = deg[size_t(i)] + 1;
            for (int j = i; j < n; ++j) deg[size_t(j)] = v;
        }
    }
}

TEST_CASE("realize produces the requested degrees") {
    for (int n = 1; n <= 6; ++n) {
        for (const std::vector<int>& deg : support::oracle_graphic_multisets(n)) {
            Graph g = realize(DegreeSequence(deg));
            CHECK(support::sorted_degrees(g) == deg);
        }
    }
    CHECK_THROWS_AS(realize(DegreeSequence(std::vector<int>{1, 1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(realize(DegreeSequence(std::vector<int>{3, 3, 1, 1})), std::invalid_argument);
}

TEST_CASE("sharpness sequences sit exactly on the boundary") {
    for (int n : {8, 10, 12}) {
        for (int i = 2; 2 * i < n; ++i) {
            DegreeSequence strict = sharpness_sequence(n, i, false);
            CHECK(is_graphic(strict));
            CHECK(!chvatal_condition(strict));
            CHECK(weak_chvatal_condition(strict));

            DegreeSequence weak = sharpness_sequence(n, i, true);
            CHECK(is_graphic(weak));
            CHECK(!weak_chvatal_condition(weak));

            // Two universal vertices force m = 2 in every realization.
            Graph g = realize(strict);
            CHECK(min_contagious(g, 2).m == 2);
            CHECK(min_contagious(realize(weak), 2).m == 2);
        }
    }
    CHECK_THROWS_AS(sharpness_sequence(8, 1, false), std::invalid_argument);
    CHECK_THROWS_AS(sharpness_sequence(8, 4, false), std::invalid_argument);
    CHECK_THROWS_AS(sharpness_sequence(9, 2, true), std::invalid_argument);
}

TEST_CASE("edge switching preserves the degree sequence") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 5 + int(rng() % 6);
        Graph g = support::gnp(n, 0.4, rng);
        Graph h = edge_switch_randomize(g, rng);
        CHECK(h.order() == g.order());
        CHECK(h.edge_count() == g.edge_count());
        CHECK(support::sorted_degrees(h) == support::sorted_degrees(g));
    }
    std::mt19937_64 a(99), b(99);
    Graph g = support::gnp(8, 0.5, a);
    Graph same_seed_input = support::gnp(8, 0.5, b);
    CHECK(edge_switch_randomize(g, a) == edge_switch_randomize(same_seed_input, b));
}

TEST_CASE("evaluate_conditions agrees with the individual predicates") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + int(rng() % 9);
        Graph g = support::gnp(n, 0.5, rng);
        for (int r : {2, 3}) {
            ConditionReport rep = evaluate_conditions(g, r);
            CHECK(rep.n == n);
            CHECK(rep.r == r);
            CHECK(rep.sigma2 == sigma2(g));
            CHECK(rep.min_degree == g.min_degree());
            CHECK(rep.ore_n == sigma2(g).at_least(n));
            CHECK(rep.ore_n_minus_2 == sigma2(g).at_least(n - 2));
            CHECK(rep.dirac_fpr == dirac_fpr(g, r));
            CHECK(rep.gunderson == (r >= 3 && gunderson(g, r)));
            CHECK(rep.gunderson_size_ok == (r >= 3 && gunderson_size_ok(n, r)));
            CHECK(rep.chvatal == chvatal_condition(degree_sequence(g)));
            CHECK(rep.weak_chvatal == weak_chvatal_condition(degree_sequence(g)));
        }
    }
    CHECK_THROWS_AS(evaluate_conditions(Graph(1), 2), std::invalid_argument);
}

TEST_CASE("parse_degree_sequence") {
    CHECK(parse_degree_sequence("3,3,3,3").values() == std::vector<int>{3, 3, 3, 3});
    CHECK(parse_degree_sequence("2, 1, 2").values() == std::vector<int>{1, 2, 2});
    CHECK(parse_degree_sequence("0").values() == std::vector<int>{0});
    CHECK_THROWS_AS(parse_degree_sequence(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_degree_sequence("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_degree_sequence("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_degree_sequence("5,0,0"), std::invalid_argument);
}
