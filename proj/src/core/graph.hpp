#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ug {

// A set of vertex labels, kept sorted and duplicate-free.
using VertexSet = std::vector<uint32_t>;

bool is_sorted_unique(const VertexSet& s);

// Simple undirected graph on vertices 0..n-1.
//
// Adjacency is a packed bit matrix, one row of 64-bit words per vertex, so
// neighborhood intersection/containment are word operations. The edge count
// is cached and kept in sync by set_edge; check_consistent() revalidates it
// together with symmetry and loop-freeness (asserted in debug builds at
// operation boundaries).
//
// Graphs are plain values: once built they are only read, and all operations
// below are pure functions, so sharing across threads is safe.
class Graph {
public:
    Graph() = default;
    explicit Graph(uint32_t n);

    uint32_t n() const { return n_; }
    uint64_t m() const { return m_; }
    size_t words_per_row() const { return words_; }

    bool has_edge(uint32_t u, uint32_t v) const;
    void set_edge(uint32_t u, uint32_t v, bool present);
    void add_edge(uint32_t u, uint32_t v) { set_edge(u, v, true); }

    uint32_t degree(uint32_t v) const;
    std::vector<uint32_t> neighbors(uint32_t v) const;

    const uint64_t* row(uint32_t v) const { return bits_.data() + size_t(v) * words_; }

    bool operator==(const Graph&) const = default;

    void check_consistent() const;

private:
    void bounds_check(uint32_t u, uint32_t v) const;

    uint32_t n_ = 0;
    size_t words_ = 0;
    uint64_t m_ = 0;
    std::vector<uint64_t> bits_;
};

// Pairs (u,v), u != v, are edges exactly where g has none.
Graph complement(const Graph& g);

// Subgraph induced by keep; vertices relabeled 0..|keep|-1 in ascending
// order of original label.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

// Removes k vertices of highest degree (ties: lowest index first). Returns
// the induced survivor graph and the deleted set. For k >= 1 the survivor
// max degree is at most 2m/k.
std::pair<Graph, VertexSet> delete_top_degree(const Graph& g, uint32_t k);

// Appends count new vertices adjacent to every other vertex, old and new.
Graph add_full_vertices(const Graph& g, uint32_t count);

uint32_t max_degree(const Graph& g);

// a on labels 0..a.n-1, b shifted to a.n..a.n+b.n-1, no cross edges.
Graph disjoint_union(const Graph& a, const Graph& b);

// Injective map of pattern vertices into host vertices.
struct Embedding {
    uint32_t pattern_size = 0;
    std::vector<uint32_t> map;  // map[pattern vertex] = host vertex
};

// Injectivity plus edge preservation of e against the given pattern/host pair.
bool embedding_valid(const Embedding& e, const Graph& pattern, const Graph& host);

}  // namespace ug
