#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "core/graph.hpp"
#include "core/rng.hpp"

namespace ug::testutil {

inline Graph clique(uint32_t n) {
    Graph g(n);
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph path(uint32_t n) {
    Graph g(n);
    for (uint32_t v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

inline Graph cycle(uint32_t n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

// center 0, leaves 1..leaves
inline Graph star(uint32_t leaves) {
    Graph g(leaves + 1);
    for (uint32_t v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

// triangle 0-1-2 plus pendant 3 attached to 2
inline Graph paw() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    return g;
}

inline Graph random_graph(uint32_t n, double p, uint64_t seed) {
    Graph g(n);
    Rng rng(seed);
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) g.add_edge(u, v);
    return g;
}

// Exhaustive injective-map containment check; the independent oracle the
// backtracking embedder is validated against.
inline bool naive_contains(const Graph& pattern, const Graph& host) {
    if (pattern.n() > host.n()) return false;
    std::vector<uint32_t> image(pattern.n());
    std::vector<bool> used(host.n(), false);
    std::function<bool(uint32_t)> rec = [&](uint32_t v) -> bool {
        if (v == pattern.n()) return true;
        for (uint32_t h = 0; h < host.n(); ++h) {
            if (used[h]) continue;
            bool ok = true;
            for (uint32_t u = 0; u < v && ok; ++u)
                if (pattern.has_edge(u, v) && !host.has_edge(image[u], h)) ok = false;
            if (!ok) continue;
            image[v] = h;
            used[h] = true;
            if (rec(v + 1)) return true;
            used[h] = false;
        }
        return false;
    };
    return rec(0);
}

// Isomorphism-class counting by permutation-orbit (Burnside) counting,
// independent of the canonical-form machinery: per permutation, edge
// subsets fixed by it decompose into whole pair-cycles, so the per-m counts
// come from the generating polynomial prod(1 + x^len).
inline std::vector<uint64_t> burnside_class_counts(uint32_t n) {
    uint32_t pairs = n * (n - 1) / 2;
    auto pair_rank = [&](uint32_t a, uint32_t b) {
        if (a > b) std::swap(a, b);
        uint32_t rank = 0;
        for (uint32_t u = 0; u < a; ++u) rank += n - 1 - u;
        return rank + (b - a - 1);
    };
    std::vector<uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<uint64_t> totals(pairs + 1, 0);
    uint64_t n_fact = 0;
    do {
        ++n_fact;
        // cycle lengths of the induced action on unordered pairs
        std::vector<bool> seen(pairs, false);
        std::vector<uint64_t> poly{1};  // coefficients over edge count
        for (uint32_t a = 0; a < n; ++a)
            for (uint32_t b = a + 1; b < n; ++b) {
                uint32_t start = pair_rank(a, b);
                if (seen[start]) continue;
                uint32_t len = 0, x = a, y = b, r = start;
                do {
                    seen[r] = true;
                    ++len;
                    uint32_t nx = perm[x], ny = perm[y];
                    x = nx;
                    y = ny;
                    r = pair_rank(x, y);
                } while (r != start);
                std::vector<uint64_t> next(poly.size() + len, 0);
                for (size_t i = 0; i < poly.size(); ++i) {
                    next[i] += poly[i];
                    next[i + len] += poly[i];
                }
                poly = std::move(next);
            }
        for (size_t i = 0; i < poly.size() && i <= pairs; ++i) totals[i] += poly[i];
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (uint64_t& t : totals) t /= n_fact;
    return totals;
}

}  // namespace ug::testutil
