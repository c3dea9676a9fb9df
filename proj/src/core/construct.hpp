#pragma once

#include <functional>
#include <optional>
#include <string>

#include "json.hpp"

#include "core/embed.hpp"
#include "core/gnp.hpp"
#include "core/graph.hpp"

namespace ug {

// Multiplicative factors on the construction constants; 1.0 everywhere is
// paper mode. A factor f replaces constant C by C*f.
struct ConstantOverrides {
    double t_denom = 1.0;        // 2^9   in t = k^3/(2^9 m^2)
    double s_num = 1.0;          // 8     in s = 8m/k
    double r_denom = 1.0;        // 4     in r = k^2/(4m)
    double p_denom = 1.0;        // 16    in p = 1 - eps k log k/(16m)
    double m_cap_denom = 1.0;    // 2^10  in m <= n log n/2^10
    double nprime_num = 1.0;     // 32    in n' = 32 m log(n log n/m)/log n
    double missing_denom = 1.0;  // 2^12  in the missing-edge target eps n^3 log n/(2^12 m)
    double ub_num = 1.0;         // 2^22  in the induction bound; echoed into reports only
    double base_num = 1.0;       // 2^11  in the recursion base n <= 2^11 m/log m

    static ConstantOverrides paper() { return {}; }
    // Desk-scale preset: makes both regimes reachable at n of a few dozen.
    static ConstantOverrides scaled_default();

    void set(const std::string& name, double factor);
    nlohmann::json to_json() const;
};

struct BuildOptions {
    SampleBudget budget;
    uint32_t graph_cap = 20000;    // refuse to materialize larger hosts
    uint32_t depth_cap = 64;       // recursion depth for second regime / doubling
    ExactCheckOptions exact_opts;
};

struct FirstRegimeParams {
    uint32_t n = 0;
    uint64_t m = 0;
    double epsilon = 0;
    uint32_t k = 0, f_size = 0, v_size = 0;
    uint64_t r = 0, s = 0, t = 0;
    double p = 0;
    uint64_t min_missing = 0;
    uint64_t ell = 0;       // floor(k(n-k)/(2m+k)), the spanning-lift budget
    bool lift_ok = false;   // r <= ell, so the lift applies to the Claim's r
    bool threshold_ok = false;
    bool feasible = false;
    std::string reason;
    nlohmann::json to_json() const;
};

// Parameter formulas of the dense construction: k = n/2, F/V split, and the
// (r,s,t)/p choices, with feasibility checks k log k < m < 3k^(3/2-eps),
// t >= 1, r >= 1, p in (0,1), and the random-graph threshold on |V|.
FirstRegimeParams first_regime_params(uint32_t n, uint64_t m, double epsilon,
                                      const ConstantOverrides& ov);

struct SecondRegimeParams {
    uint32_t n = 0;
    uint64_t m = 0;
    uint64_t n_prime = 0;
    double p = 0;
    uint32_t k = 0, v1 = 0, v2 = 0, reserve = 0;
    int64_t v3 = 0;
    DominationParams d;
    uint64_t delta1 = 0, delta2 = 0;
    bool feasible = false;       // the regime window: n/2 <= m <= n log n/2^10, n' <= 2n/3
    std::string reason;
    bool buildable = false;      // additional structural checks the builder needs
    std::string build_reason;
    nlohmann::json to_json() const;
};

SecondRegimeParams second_regime_params(uint32_t n, uint64_t m, const ConstantOverrides& ov);

enum class RegimeTag { FirstRegime, SecondRegime, SmallM, Doubling, CliqueBase };
const char* regime_tag_name(RegimeTag t);

struct ConstructionReport {
    RegimeTag regime = RegimeTag::CliqueBase;
    std::optional<Graph> graph;
    uint64_t edge_count = 0;
    uint64_t missing_edges = 0;  // C(n,2) - edge_count
    bool feasible = true;
    std::string reason;
    std::optional<CertLevel> cert;
    uint32_t recursion_depth = 0;
    nlohmann::json params;
    nlohmann::json to_json() const;  // graph itself serialized separately (graph6)
};

// The dense host: F = k/2 full-degree vertices on [0,f), V = a
// domination-certified sample on [f,k), then n-k more full vertices.
ConstructionReport build_first_regime(uint32_t n, uint64_t m, double epsilon, uint64_t seed,
                                      const ConstantOverrides& ov, const BuildOptions& opts = {});

// The recursive block host: V1 full-degree (with straggler reserve), V2 an
// inner universal graph built recursively (complete-graph base case), V3 the
// domination block, base random layer over all of V1+V2+V3, then n-k more
// full vertices.
ConstructionReport build_second_regime(uint32_t n, uint64_t m, uint64_t seed,
                                       const ConstantOverrides& ov, const BuildOptions& opts = {});

// m < n/2: builds a (2m, m)-universal candidate and pads with isolated
// vertices; every m-edge target has at most 2m non-isolated vertices.
ConstructionReport build_small_m(uint32_t n, uint64_t m, double epsilon, uint64_t seed,
                                 const ConstantOverrides& ov, const BuildOptions& opts = {});

// Two inner copies (sizes ceil(n/2) and floor(n/2)) with the complete
// bipartite join between them: g(n,x) <= 2 g(n/2,x) + (n/2)^2.
ConstructionReport build_doubling(
    uint32_t n, uint64_t m,
    const std::function<ConstructionReport(uint32_t, uint64_t)>& inner_builder);

// Regime dispatch: small-m, then second regime, then first regime, then the
// complete-graph base case, then the doubling bridge, in feasibility order.
ConstructionReport build(uint32_t n, uint64_t m, double epsilon, uint64_t seed,
                         const ConstantOverrides& ov, const BuildOptions& opts = {});

// Rebuild embedding hosts from a construction report's layout.
FirstRegimeHost first_regime_host_from_report(const Graph& g, const nlohmann::json& report);
BlockHost block_host_from_report(const Graph& g, const nlohmann::json& report);

}  // namespace ug
