#include "core/graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

#include "core/errors.hpp"

namespace ug {

bool is_sorted_unique(const VertexSet& s) {
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

Graph::Graph(uint32_t n) : n_(n), words_((n + 63) / 64), bits_(size_t(n) * words_, 0) {}

void Graph::bounds_check(uint32_t u, uint32_t v) const {
    if (u >= n_ || v >= n_) throw InvalidArgument("vertex out of range");
}

bool Graph::has_edge(uint32_t u, uint32_t v) const {
    bounds_check(u, v);
    if (u == v) return false;
    return (row(u)[v >> 6] >> (v & 63)) & 1;
}

void Graph::set_edge(uint32_t u, uint32_t v, bool present) {
    bounds_check(u, v);
    if (u == v) throw InvalidArgument("self-loops are not allowed");
    uint64_t* ru = bits_.data() + size_t(u) * words_;
    uint64_t* rv = bits_.data() + size_t(v) * words_;
    bool had = (ru[v >> 6] >> (v & 63)) & 1;
    if (had == present) return;
    ru[v >> 6] ^= uint64_t(1) << (v & 63);
    rv[u >> 6] ^= uint64_t(1) << (u & 63);
    m_ += present ? 1 : -1;
}

uint32_t Graph::degree(uint32_t v) const {
    bounds_check(v, v);
    const uint64_t* r = row(v);
    uint32_t d = 0;
    for (size_t w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

std::vector<uint32_t> Graph::neighbors(uint32_t v) const {
    bounds_check(v, v);
    std::vector<uint32_t> out;
    const uint64_t* r = row(v);
    for (size_t w = 0; w < words_; ++w) {
        uint64_t bits = r[w];
        while (bits) {
            out.push_back(uint32_t(w * 64 + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

void Graph::check_consistent() const {
    uint64_t count = 0;
    for (uint32_t v = 0; v < n_; ++v) {
        assert(!((row(v)[v >> 6] >> (v & 63)) & 1) && "self-loop");
        count += degree(v);
        // tail words past bit n-1 must be zero so equality stays structural
        for (size_t w = 0; w < words_; ++w) {
            uint64_t word = row(v)[w];
            if ((w + 1) * 64 > n_) {
                uint32_t valid = n_ - uint32_t(w * 64);
                assert((word >> valid << valid) == 0 || valid == 64);
            }
            (void)word;
        }
    }
    assert(count == 2 * m_ && "cached edge count out of sync");
    for (uint32_t u = 0; u < n_; ++u)
        for (uint32_t v = u + 1; v < n_; ++v)
            assert(has_edge(u, v) == has_edge(v, u));
    (void)count;
}

Graph complement(const Graph& g) {
    Graph out(g.n());
    for (uint32_t u = 0; u < g.n(); ++u)
        for (uint32_t v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    assert((out.check_consistent(), true));
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    if (!is_sorted_unique(keep)) throw InvalidArgument("vertex set must be sorted and duplicate-free");
    for (uint32_t v : keep)
        if (v >= g.n()) throw InvalidArgument("InvalidVertex: vertex out of range in induced_subgraph");
    Graph out(uint32_t(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j])) out.add_edge(uint32_t(i), uint32_t(j));
    return out;
}

std::pair<Graph, VertexSet> delete_top_degree(const Graph& g, uint32_t k) {
    if (k > g.n()) throw InvalidArgument("cannot delete more vertices than the graph has");
    std::vector<uint32_t> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return g.degree(a) > g.degree(b);
    });
    VertexSet deleted(order.begin(), order.begin() + k);
    std::sort(deleted.begin(), deleted.end());
    VertexSet kept;
    kept.reserve(g.n() - k);
    size_t di = 0;
    for (uint32_t v = 0; v < g.n(); ++v) {
        if (di < deleted.size() && deleted[di] == v) {
            ++di;
        } else {
            kept.push_back(v);
        }
    }
    return {induced_subgraph(g, kept), deleted};
}

Graph add_full_vertices(const Graph& g, uint32_t count) {
    Graph out(g.n() + count);
    for (uint32_t u = 0; u < g.n(); ++u)
        for (uint32_t v : g.neighbors(u))
            if (u < v) out.add_edge(u, v);
    for (uint32_t f = g.n(); f < out.n(); ++f)
        for (uint32_t v = 0; v < out.n(); ++v)
            if (v != f) out.set_edge(f, v, true);
    assert(out.m() == g.m() + uint64_t(count) * g.n() + uint64_t(count) * (count - 1) / 2);
    return out;
}

uint32_t max_degree(const Graph& g) {
    uint32_t best = 0;
    for (uint32_t v = 0; v < g.n(); ++v) best = std::max(best, g.degree(v));
    return best;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out(a.n() + b.n());
    for (uint32_t u = 0; u < a.n(); ++u)
        for (uint32_t v : a.neighbors(u))
            if (u < v) out.add_edge(u, v);
    for (uint32_t u = 0; u < b.n(); ++u)
        for (uint32_t v : b.neighbors(u))
            if (u < v) out.add_edge(a.n() + u, a.n() + v);
    return out;
}

bool embedding_valid(const Embedding& e, const Graph& pattern, const Graph& host) {
    if (e.pattern_size != pattern.n() || e.map.size() != pattern.n()) return false;
    std::vector<bool> used(host.n(), false);
    for (uint32_t img : e.map) {
        if (img >= host.n() || used[img]) return false;
        used[img] = true;
    }
    for (uint32_t u = 0; u < pattern.n(); ++u)
        for (uint32_t v : pattern.neighbors(u))
            if (u < v && !host.has_edge(e.map[u], e.map[v])) return false;
    return true;
}

}  // namespace ug
