#pragma once

#include <functional>
#include <optional>
#include <ostream>

#include "core/domination.hpp"
#include "core/graph.hpp"

namespace ug {

// Ground-truth containment test: complete backtracking search for an
// injective edge-preserving map of pattern into host, pattern vertices
// processed in degree-descending order, host candidates in ascending index.
// Deterministic; isolated pattern vertices may map anywhere unused.
std::optional<Embedding> embed_subgraph_oracle(const Graph& pattern, const Graph& host);

// Result of repeatedly removing a minimum-degree vertex and its current
// neighborhood. peeled is an independent set with no neighbors among the
// survivors.
struct PeelResult {
    std::vector<uint32_t> peeled;  // in peel order
    VertexSet survivors;           // original labels
    Graph survivor_graph;          // induced on survivors, relabeled ascending
    VertexSet removed;             // peeled vertices plus their neighborhoods
};

// ell rounds of min-degree peeling (ties: lowest index). Throws
// ShrunkBelowTarget if the graph empties before ell rounds.
PeelResult peel_min_degree(const Graph& h, uint32_t ell);

using InnerEmbedFn = std::function<std::optional<Embedding>(const Graph& pattern)>;

struct LiftResult {
    Graph host;  // inner on [0,k-ell), ell spare slots, n-k full vertices on [k,n)
    Embedding embedding;
    uint64_t ell;
};

// The almost-spanning-to-spanning lift: peels ell = floor(k(n-k)/(2m+k))
// vertices from h, sends the peeled vertices' removed neighborhoods (and any
// survivor overflow) to full-degree slots, embeds the residual k-ell
// survivors into inner_universal via embed_inner, and parks the peeled
// independent set on the spare slots.
LiftResult embed_via_full_vertices(const Graph& h, uint32_t k, const Graph& inner_universal,
                                   const InnerEmbedFn& embed_inner);

struct EmbedOptions {
    bool fallback_to_oracle = false;  // on NoDominatingPair, defer to the oracle
    std::ostream* trace = nullptr;    // per-step placement log
};

// Host with a full-degree side F and a domination side V (F and V partition
// the vertices; every F vertex is adjacent to all others).
struct FirstRegimeHost {
    Graph graph;
    VertexSet F;
    VertexSet V;
    DominationParams d;
    void validate() const;
};

// Greedy domination embedding: top half of F absorbs the highest-degree
// pattern vertices, V is filled one vertex per dominating-pair query until
// only r slots stay free, leftovers take the remaining F slots.
Embedding embed_first_regime(const Graph& h, const FirstRegimeHost& host,
                             const EmbedOptions& opts = {});

// Host split into a full-degree block V1 (with `reserve` slots kept free for
// stragglers), a block V2 carrying an inner universal graph, and a
// domination block V3.
struct BlockHost {
    Graph graph;
    VertexSet V1;
    VertexSet V2;
    VertexSet V3;
    uint32_t reserve = 0;
    DominationParams d;
    void validate() const;
};

// Three-block embedding: highest-degree vertices into V1, next block into V2
// via embed_inner, remainder into V3 by dominating-pair queries until only
// `reserve` vertices are left, which go to the reserved V1 slots.
Embedding embed_second_regime(const Graph& h, const BlockHost& host,
                              const InnerEmbedFn& embed_inner, const EmbedOptions& opts = {});

}  // namespace ug
