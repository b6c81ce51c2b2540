#include "perckit/percolation.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace perckit {

namespace {

void check_args(const Graph& g, const VertexSet& seed, int r) {
    if (r < 1) throw std::invalid_argument("percolation: threshold r must be >= 1");
    if (seed.ambient_size() != g.order())
        throw std::invalid_argument("percolation: seed ambient size " +
                                    std::to_string(seed.ambient_size()) +
                                    " does not match graph order " + std::to_string(g.order()));
}

// One synchronous round; returns false at the fixpoint.
bool step(const Graph& g, VertexSet& active, int r) {
    VertexSet woken(g.order());
    VertexSet dormant = active.complement();
    dormant.for_each([&](int v) {
        if (g.neighbors(v).intersection_count(active) >= r) woken.insert(v);
    });
    if (woken.empty()) return false;
    active |= woken;
    return true;
}

}  // namespace

PercolationTrace percolate(const Graph& g, const VertexSet& seed, int r) {
    check_args(g, seed, r);
    PercolationTrace trace;
    trace.r = r;
    trace.rounds.push_back(seed);
    VertexSet active = seed;
    while (step(g, active, r)) trace.rounds.push_back(active);
    return trace;
}

VertexSet closure(const Graph& g, const VertexSet& seed, int r) {
    check_args(g, seed, r);
    VertexSet active = seed;
    while (step(g, active, r)) {
    }
    return active;
}

bool is_contagious(const Graph& g, const VertexSet& seed, int r) {
    return closure(g, seed, r).count() == g.order();
}

namespace {

using Mask = std::uint64_t;

Mask close_mask(const std::vector<Mask>& adj, Mask full, Mask active, int r) {
    bool grew = true;
    while (grew) {
        grew = false;
        Mask dormant = full & ~active;
        while (dormant) {
            int v = std::countr_zero(dormant);
            dormant &= dormant - 1;
            if (std::popcount(adj[size_t(v)] & active) >= r) {
                active |= Mask(1) << v;
                grew = true;
            }
        }
    }
    return active;
}

struct ExactSearch {
    const std::vector<Mask>& adj;
    Mask full;
    int r;
    Mask found = 0;

    // Chooses the largest remaining seed below `limit`, scanning candidates
    // ascending, so complete sets appear in colex order, i.e. ascending
    // bitmask value; the first contagious set found is the smallest-mask
    // witness.  Candidates inside the closure of the seeds chosen so far
    // are skipped: a minimum contagious set never contains one.
    bool search(int picks, int limit, Mask chosen, Mask closed) {
        if (picks == 0) {
            if (closed != full) return false;
            found = chosen;
            return true;
        }
        for (int c = picks - 1; c < limit; ++c) {
            if (closed >> c & 1) continue;
            Mask next = close_mask(adj, full, closed | Mask(1) << c, r);
            if (search(picks - 1, c, chosen | Mask(1) << c, next)) return true;
        }
        return false;
    }
};

}  // namespace

MinContagiousResult min_contagious(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("min_contagious: threshold r must be >= 1");
    const int n = g.order();
    if (n > kExactSolverOrderCap)
        throw std::invalid_argument("min_contagious: order " + std::to_string(n) +
                                    " exceeds the exact-search cap of " +
                                    std::to_string(kExactSolverOrderCap) +
                                    "; use greedy_upper_bound");

    std::vector<Mask> adj(size_t(n), 0);
    for (auto [u, v] : g.edges()) {
        adj[size_t(u)] |= Mask(1) << v;
        adj[size_t(v)] |= Mask(1) << u;
    }
    const Mask full = n == 0 ? 0 : ~Mask(0) >> (64 - n);

    for (int k = std::min(r, n); k <= n; ++k) {
        ExactSearch search{adj, full, r};
        if (search.search(k, n, 0, 0)) {
            MinContagiousResult res;
            res.m = k;
            res.exact = true;
            res.witness = VertexSet(n);
            for (int v = 0; v < n; ++v)
                if (search.found >> v & 1) res.witness.insert(v);
            return res;
        }
    }
    // unreachable: seeding all of V is always contagious
    throw std::logic_error("min_contagious: search exhausted without a witness");
}

std::optional<std::pair<int, int>> m2_witness_pair(const Graph& g) {
    const int n = g.order();
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(size_t(n) * size_t(n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
        return g.degree(a.first) + g.degree(a.second) > g.degree(b.first) + g.degree(b.second);
    });
    for (auto [u, v] : pairs) {
        VertexSet seed(n);
        seed.insert(u);
        seed.insert(v);
        if (is_contagious(g, seed, 2)) return std::make_pair(u, v);
    }
    return std::nullopt;
}

VertexSet greedy_upper_bound(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("greedy_upper_bound: threshold r must be >= 1");
    const int n = g.order();
    VertexSet chosen(n);
    VertexSet closed(n);
    while (closed.count() < n) {
        int best = -1;
        int best_size = -1;
        VertexSet best_closure(n);
        for (int v = 0; v < n; ++v) {
            if (closed.contains(v)) continue;
            VertexSet trial = closed;
            trial.insert(v);
            trial = closure(g, trial, r);
            if (int(trial.count()) > best_size) {
                best = v;
                best_size = int(trial.count());
                best_closure = trial;
            }
        }
        chosen.insert(best);
        closed = best_closure;
    }
    return chosen;
}

MaximalInfection maximal_infection(const Graph& g, int r) {
    if (r != 2) throw std::invalid_argument("maximal_infection: only r = 2 is supported");
    if (g.order() < 2) throw std::invalid_argument("maximal_infection: order must be >= 2");
    MaximalInfection best;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            VertexSet seed(g.order());
            seed.insert(u);
            seed.insert(v);
            VertexSet c = closure(g, seed, 2);
            if (best.u < 0 || c.count() > best.set.count()) {
                best.set = c;
                best.u = u;
                best.v = v;
            }
        }
    return best;
}

}  // namespace perckit
