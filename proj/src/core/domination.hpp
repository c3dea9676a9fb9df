#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/graph.hpp"

namespace ug {

// The (r,s,t)-domination property: for every vertex set R of size r and
// every t pairwise-disjoint s-sets disjoint from R, some vertex of R is a
// common neighbor of one whole s-set.
struct DominationParams {
    uint32_t r = 1, s = 1, t = 1;
};

struct DominationCounterexample {
    VertexSet R;
    std::vector<VertexSet> families;
    std::string to_json() const;  // {"R":[...],"families":[[...],...]}
};

struct ExactCheckOptions {
    uint64_t probe_cap = 100'000'000;  // adjacency probes before ExactCheckInfeasible
};

// Some (v, i) with v in R adjacent to every vertex of families[i], lowest
// (i, v) lexicographically; nothing when no such pair exists. Inputs must be
// pairwise disjoint (families among themselves and against R).
std::optional<std::pair<uint32_t, uint32_t>> find_dominating_pair(
    const Graph& g, const VertexSet& R, const std::vector<VertexSet>& families);

// nullopt when the property holds; vacuously so when r + s*t > n. Otherwise
// the lexicographically first counterexample (R outermost, families ordered
// by minimum element). Throws ExactCheckInfeasible past the probe cap.
std::optional<DominationCounterexample> check_domination_exact(
    const Graph& g, const DominationParams& d, const ExactCheckOptions& opts = {});

// Samples `trials` uniformly random valid (R, families) configurations and
// returns the first one with no dominating pair. Deterministic given seed.
std::optional<DominationCounterexample> refute_domination_randomized(
    const Graph& g, const DominationParams& d, uint32_t trials, uint64_t seed);

// The random-graph sufficiency condition 3 log n <= p^s * min(r/s, t),
// natural log, decided with certified enclosures.
bool domination_threshold_ok(uint64_t n, double p, const DominationParams& d);

}  // namespace ug
