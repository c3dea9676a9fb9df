#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "core/domination.hpp"
#include "core/errors.hpp"
#include "core/graph.hpp"

namespace ug {

struct GnpSpec {
    uint32_t n = 0;
    double p = 0.0;  // in [0,1]
    uint64_t seed = 0;
};

struct SampleBudget {
    uint32_t max_tries = 100;
    uint32_t refutation_trials = 1000;
};

// How a sampled graph's domination property was certified: verified exactly
// (tiny parameter regime) or only survived randomized refutation.
struct CertLevel {
    enum Kind { Exact, RefutationSurvived } kind = Exact;
    uint32_t trials = 0;
    std::string to_string() const;  // "exact" | "refutation-survived(trials=N)"
};

struct SampleResult {
    Graph graph;
    CertLevel cert;
    uint32_t tries_used = 0;
    uint64_t missing_edges = 0;
};

class BudgetExhausted : public Error {
public:
    BudgetExhausted(std::string reason, std::optional<Graph> best)
        : Error(ErrorCode::BudgetExhausted, "sampling budget exhausted: " + reason),
          reason_(std::move(reason)),
          best_(std::move(best)) {}
    const std::string& reason() const { return reason_; }
    const std::optional<Graph>& best_candidate() const { return best_; }

private:
    std::string reason_;
    std::optional<Graph> best_;
};

// Each unordered pair is an edge independently with probability p, pairs
// visited in (u,v) ascending order, one counter-based draw per pair.
// Identical spec -> identical graph.
Graph sample_gnp(const GnpSpec& spec);

// Resamples (per-try seeds derived from spec.seed by try index; first
// success in index order) until a graph has at least min_missing non-edges,
// at most max_edges edges, and passes the domination check: exactly when the
// enumeration fits the probe cap, otherwise by surviving the configured
// refutation trials.
SampleResult sample_with_requirements(const GnpSpec& spec, const DominationParams& d,
                                      uint64_t min_missing, const SampleBudget& budget,
                                      const ExactCheckOptions& exact_opts = {},
                                      uint64_t max_edges = UINT64_MAX);

}  // namespace ug
