#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "core/graph.hpp"

namespace ug {

enum class EnumerationMode { Labeled, UpToIsomorphism };

struct EnumLimits {
    uint64_t labeled_cap = 5'000'000;  // max labeled graphs to stream
    uint32_t iso_n_cap = 10;           // canonical labeling cap
    uint32_t exact_g_n_cap = 7;        // exact_g / exact_f search cap
};

// Minimum adjacency encoding over all vertex permutations (upper-triangle
// bits column by column, first bit most significant), computed by
// branch-and-bound. Equal for isomorphic graphs, n <= 10.
uint64_t canonical_form(const Graph& g);

// Decodes a canonical encoding back into a concrete graph.
Graph graph_from_encoding(uint32_t n, uint64_t encoding);

uint64_t count_labeled(uint32_t n, uint64_t m);  // C(C(n,2), m), saturating at UINT64_MAX

// Labeled mode streams all C(C(n,2), m) graphs in lexicographic edge-set
// order ((u,v) pairs row-major); stop early by returning false.
void for_each_labeled(uint32_t n, uint64_t m, const EnumLimits& limits,
                      const std::function<bool(const Graph&)>& visit);

// One canonical representative per isomorphism class of n-vertex m-edge
// graphs, sorted by encoding. Generated by vertex extension with
// canonical-form dedup; results are memo-cached per (n, m).
const std::vector<uint64_t>& class_encodings(uint32_t n, uint64_t m, const EnumLimits& limits = {});

std::vector<Graph> enumerate_graphs(uint32_t n, uint64_t m, EnumerationMode mode,
                                    const EnumLimits& limits = {});

struct UniversalityWitness {
    bool verdict = false;
    std::optional<Graph> failing_target;  // present iff verdict is false
    uint64_t targets_checked = 0;
};

// Checks every isomorphism class of n-vertex m-edge graphs against the host
// (host.n >= n; spanning universality when equal). First failure in
// canonical order is returned as the witness.
UniversalityWitness is_universal(const Graph& host, uint32_t n, uint64_t m,
                                 const EnumLimits& limits = {});

// Monte Carlo stand-in for is_universal at sizes where enumeration is
// infeasible: embeds `samples` seeded random m-edge targets.
UniversalityWitness spot_check_universal(const Graph& host, uint32_t n, uint64_t m,
                                         uint32_t samples, uint64_t seed);

struct ExactG {
    uint64_t value = 0;
    Graph witness;
};

// Minimum edge count of an (n,m)-universal host on n vertices, by searching
// hosts upward in edge count and within a count in canonical order. The
// returned witness is the first universal host found (deterministic).
ExactG exact_g(uint32_t n, uint64_t m, const EnumLimits& limits = {});

// f(n,e) via the complement identity f = C(n,2) - g(n, C(n,2)-e).
uint64_t exact_f(uint32_t n, uint64_t e, const EnumLimits& limits = {});

// f(n,e) straight from the definition: the maximum edge count of an n-vertex
// graph contained in every n-vertex e-edge graph. Independent of exact_g.
uint64_t exact_f_direct(uint32_t n, uint64_t e, const EnumLimits& limits = {});

}  // namespace ug
