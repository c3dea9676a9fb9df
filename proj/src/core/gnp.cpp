#include "core/gnp.hpp"

#include <cmath>

#include "core/rng.hpp"

namespace ug {

std::string CertLevel::to_string() const {
    if (kind == Exact) return "exact";
    return "refutation-survived(trials=" + std::to_string(trials) + ")";
}

Graph sample_gnp(const GnpSpec& spec) {
    if (spec.p < 0.0 || spec.p > 1.0) throw InvalidArgument("edge probability must be in [0,1]");
    Graph g(spec.n);
    Rng rng(spec.seed);
    for (uint32_t u = 0; u < spec.n; ++u)
        for (uint32_t v = u + 1; v < spec.n; ++v)
            if (rng.bernoulli(spec.p)) g.add_edge(u, v);
    return g;
}

namespace {

double log_binomial(uint64_t n, uint64_t k) {
    if (k > n) return -1;
    return std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) - std::lgamma(double(n - k) + 1);
}

// Rough upper estimate of the exact check's probe count: bad-set scanning
// dominates, C(n,r) * C(n-r,s) * r * s probes.
double estimated_exact_probes(uint32_t n, const DominationParams& d) {
    double lg = log_binomial(n, d.r) + log_binomial(n - d.r, d.s);
    if (lg > 60) return 1e30;
    return std::exp(lg) * double(d.r) * double(d.s);
}

}  // namespace

SampleResult sample_with_requirements(const GnpSpec& spec, const DominationParams& d,
                                      uint64_t min_missing, const SampleBudget& budget,
                                      const ExactCheckOptions& exact_opts, uint64_t max_edges) {
    if (budget.max_tries < 1) throw InvalidArgument("max_tries must be >= 1");
    uint64_t pairs = uint64_t(spec.n) * (spec.n - 1) / 2;
    bool vacuous = uint64_t(d.r) + uint64_t(d.s) * d.t > spec.n;  // no valid family arrangement
    bool try_exact = vacuous || estimated_exact_probes(spec.n, d) <= double(exact_opts.probe_cap);

    std::optional<Graph> best;
    std::string last_failure = "no tries executed";
    for (uint32_t t = 0; t < budget.max_tries; ++t) {
        GnpSpec try_spec = spec;
        try_spec.seed = Rng::derive_seed(spec.seed, t);
        Graph g = sample_gnp(try_spec);
        uint64_t missing = pairs - g.m();
        if (missing < min_missing) {
            last_failure = "missing edges " + std::to_string(missing) + " < required " +
                           std::to_string(min_missing);
            if (!best) best = g;
            continue;
        }
        if (g.m() > max_edges) {
            last_failure = "edge count " + std::to_string(g.m()) + " > cap " + std::to_string(max_edges);
            if (!best) best = g;
            continue;
        }
        if (try_exact) {
            try {
                if (auto ce = check_domination_exact(g, d, exact_opts)) {
                    last_failure = "exact domination check failed: " + ce->to_json();
                    best = std::move(g);
                    continue;
                }
                return SampleResult{std::move(g), CertLevel{CertLevel::Exact, 0}, t + 1, missing};
            } catch (const ExactCheckInfeasible&) {
                try_exact = false;  // estimate was off; fall through to refutation
            }
        }
        uint64_t refute_seed = Rng::derive_seed(try_spec.seed, 0x5eedULL);
        if (auto ce = refute_domination_randomized(g, d, budget.refutation_trials, refute_seed)) {
            last_failure = "randomized refutation found a counterexample: " + ce->to_json();
            best = std::move(g);
            continue;
        }
        return SampleResult{std::move(g),
                            CertLevel{CertLevel::RefutationSurvived, budget.refutation_trials},
                            t + 1, missing};
    }
    throw BudgetExhausted(last_failure, std::move(best));
}

}  // namespace ug
