#include "core/construct.hpp"

#include <algorithm>
#include <cmath>

#include "core/bounds.hpp"
#include "core/errors.hpp"
#include "core/precise.hpp"
#include "core/rng.hpp"

namespace ug {

using nlohmann::json;

ConstantOverrides ConstantOverrides::scaled_default() {
    ConstantOverrides ov;
    ov.t_denom = 1.0 / 512;      // 2^9 -> 1
    ov.s_num = 1.0 / 8;          // 8 -> 1
    ov.m_cap_denom = 1.0 / 1024; // 2^10 -> 1
    ov.nprime_num = 1.0 / 32;    // 32 -> 1
    ov.base_num = 1.0 / 128;     // 2^11 -> 16
    return ov;
}

void ConstantOverrides::set(const std::string& name, double factor) {
    if (factor <= 0) throw InvalidArgument("override factor must be positive");
    if (name == "t_denom") t_denom = factor;
    else if (name == "s_num") s_num = factor;
    else if (name == "r_denom") r_denom = factor;
    else if (name == "p_denom") p_denom = factor;
    else if (name == "m_cap_denom") m_cap_denom = factor;
    else if (name == "nprime_num") nprime_num = factor;
    else if (name == "missing_denom") missing_denom = factor;
    else if (name == "ub_num") ub_num = factor;
    else if (name == "base_num") base_num = factor;
    else throw InvalidArgument("unknown override name: " + name);
}

json ConstantOverrides::to_json() const {
    return json{{"t_denom", t_denom},       {"s_num", s_num},
                {"r_denom", r_denom},       {"p_denom", p_denom},
                {"m_cap_denom", m_cap_denom}, {"nprime_num", nprime_num},
                {"missing_denom", missing_denom}, {"ub_num", ub_num},
                {"base_num", base_num}};
}

const char* regime_tag_name(RegimeTag t) {
    switch (t) {
        case RegimeTag::FirstRegime: return "FirstRegime";
        case RegimeTag::SecondRegime: return "SecondRegime";
        case RegimeTag::SmallM: return "SmallM";
        case RegimeTag::Doubling: return "Doubling";
        case RegimeTag::CliqueBase: return "CliqueBase";
    }
    return "?";
}

json ConstructionReport::to_json() const {
    json j;
    j["regime"] = regime_tag_name(regime);
    j["edge_count"] = edge_count;
    j["missing_edges"] = missing_edges;
    j["feasible"] = feasible;
    if (!reason.empty()) j["reason"] = reason;
    if (cert) j["cert"] = cert->to_string();
    j["recursion_depth"] = recursion_depth;
    j["params"] = params;
    if (graph) {
        j["n"] = graph->n();
        j["m"] = graph->m();
    }
    return j;
}

namespace {

using u128 = unsigned __int128;

uint64_t floor_div_u128(u128 num, u128 den) { return uint64_t(num / den); }

// floor(num/(c*den)) and ceil(num*c/den) with a double scale factor; integer
// arithmetic when the factor is exactly 1 (paper mode), extended precision
// otherwise.
uint64_t scaled_floor_div(u128 num, u128 den, double factor) {
    if (den == 0) throw InvalidArgument("division by zero in parameter formula");
    if (factor == 1.0) return floor_div_u128(num, den);
    long double v = (long double)num / ((long double)den * (long double)factor);
    if (v < 0) return 0;
    return uint64_t(std::floor(v));
}

uint64_t scaled_ceil_mul_div(u128 num, u128 den, double factor) {
    if (den == 0) throw InvalidArgument("division by zero in parameter formula");
    if (factor == 1.0) return uint64_t((num + den - 1) / den);
    long double v = (long double)num * (long double)factor / (long double)den;
    return uint64_t(std::ceil(v));
}

ConstructionReport clique_report(uint32_t n, const std::string& note) {
    Graph g(n);
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    ConstructionReport r;
    r.regime = RegimeTag::CliqueBase;
    r.edge_count = g.m();
    r.missing_edges = 0;
    r.graph = std::move(g);
    r.params = json{{"n", n}, {"note", note}};
    return r;
}

void check_graph_cap(uint32_t n, const BuildOptions& opts) {
    if (n > opts.graph_cap)
        throw RegimeInfeasible("n = " + std::to_string(n) + " exceeds the materialization cap " +
                               std::to_string(opts.graph_cap) +
                               "; use the parameter/bounds paths instead");
}

}  // namespace

json FirstRegimeParams::to_json() const {
    return json{{"n", n},     {"m", m},           {"epsilon", epsilon},
                {"k", k},     {"f_size", f_size}, {"v_size", v_size},
                {"r", r},     {"s", s},           {"t", t},
                {"p", p},     {"min_missing", min_missing},
                {"ell", ell}, {"lift_ok", lift_ok},
                {"threshold_ok", threshold_ok},
                {"feasible", feasible}, {"reason", reason}};
}

FirstRegimeParams first_regime_params(uint32_t n, uint64_t m, double epsilon,
                                      const ConstantOverrides& ov) {
    if (n < 4) throw InvalidArgument("first_regime_params needs n >= 4");
    if (epsilon <= 0) throw InvalidArgument("epsilon must be positive");
    if (m < 1) throw InvalidArgument("first_regime_params needs m >= 1");

    FirstRegimeParams p;
    p.n = n;
    p.m = m;
    p.epsilon = epsilon;
    p.k = n / 2;
    p.f_size = p.k / 2;
    p.v_size = p.k - p.f_size;

    u128 k = p.k;
    p.r = scaled_floor_div(k * k, u128(4) * m, ov.r_denom);
    p.s = scaled_ceil_mul_div(u128(8) * m, k, ov.s_num);
    if (u128(m) * m >= k * k * k) {
        p.t = 0;
    } else {
        p.t = scaled_floor_div(k * k * k, u128(512) * m * m, ov.t_denom);
    }
    double logk = std::log(double(p.k));
    double p_raw = 1.0 - epsilon * double(p.k) * logk / (16.0 * ov.p_denom * double(m));
    p.p = std::min(1.0, std::max(0.0, p_raw));
    uint64_t v_pairs = uint64_t(p.v_size) * (p.v_size - 1) / 2;
    p.min_missing = uint64_t(std::floor((1.0 - p.p) * double(v_pairs) / 2.0));
    p.ell = floor_div_u128(k * (n - p.k), u128(2) * m + p.k);
    p.lift_ok = p.r <= p.ell;

    p.threshold_ok = false;
    if (p.r >= 1 && p.s >= 1 && p.t >= 1 && p.v_size >= 2 && p.p > 0 &&
        p.r <= UINT32_MAX && p.s <= UINT32_MAX && p.t <= UINT32_MAX) {
        p.threshold_ok = domination_threshold_ok(
            p.v_size, p.p, DominationParams{uint32_t(p.r), uint32_t(p.s), uint32_t(p.t)});
    }

    // feasibility in check order; first failure is the reason
    if (cmp_int_vs_nlogn(m, p.k) <= 0) {
        p.reason = "below first-regime range (m <= k log k)";
    } else if (cmp_int_vs_c_pow(m, 3.0, p.k, epsilon) >= 0) {
        p.reason = "above first-regime range (m >= 3 k^(3/2-eps))";
    } else if (p.t < 1) {
        p.reason = "t<1";
    } else if (p.r < 1) {
        p.reason = "r<1";
    } else if (p.p <= 0.0) {
        p.reason = "p<=0";
    } else if (p.p >= 1.0) {
        p.reason = "p>=1";
    } else if (!p.threshold_ok) {
        p.reason = "domination threshold fails (asymptotic; certification replaces it when building)";
    }
    // the threshold is advisory for construction: the sampled graph is
    // certified directly, so only the structural checks gate a build
    p.feasible = p.reason.empty();
    return p;
}

namespace {

bool first_regime_buildable(const FirstRegimeParams& p, std::string* why) {
    if (!p.feasible &&
        p.reason.find("domination threshold") == std::string::npos) {
        *why = p.reason;
        return false;
    }
    if (uint64_t(p.r) + p.s * p.t > p.v_size) {
        // the embedding needs R and the families inside V
        *why = "r + s*t exceeds |V| at this scale";
        return false;
    }
    return true;
}

}  // namespace

ConstructionReport build_first_regime(uint32_t n, uint64_t m, double epsilon, uint64_t seed,
                                      const ConstantOverrides& ov, const BuildOptions& opts) {
    uint64_t pairs = pairs_of(n);
    if (m >= pairs) return clique_report(n, "m >= C(n,2): only K_n is universal");

    FirstRegimeParams params = first_regime_params(n, m, epsilon, ov);
    std::string why;
    if (!first_regime_buildable(params, &why)) throw RegimeInfeasible(why);
    check_graph_cap(n, opts);

    GnpSpec spec{params.v_size, params.p, seed};
    DominationParams d{uint32_t(params.r), uint32_t(params.s), uint32_t(params.t)};
    SampleResult sample =
        sample_with_requirements(spec, d, params.min_missing, opts.budget, opts.exact_opts);

    Graph gk(params.k);
    for (uint32_t f = 0; f < params.f_size; ++f)
        for (uint32_t v = 0; v < params.k; ++v)
            if (v != f) gk.set_edge(f, v, true);
    for (uint32_t u = 0; u < params.v_size; ++u)
        for (uint32_t v : sample.graph.neighbors(u))
            if (u < v) gk.add_edge(params.f_size + u, params.f_size + v);

    Graph g = add_full_vertices(gk, n - params.k);

    ConstructionReport r;
    r.regime = RegimeTag::FirstRegime;
    r.edge_count = g.m();
    r.missing_edges = pairs - g.m();
    r.cert = sample.cert;
    r.params = params.to_json();
    r.params["overrides"] = ov.to_json();
    r.params["layout"] = json{{"f_lo", 0},        {"f_hi", params.f_size},
                              {"v_lo", params.f_size}, {"v_hi", params.k},
                              {"extra_full_lo", params.k}, {"extra_full_hi", n}};
    double target = epsilon * std::pow(double(n), 3) * std::log(double(n)) /
                    (4096.0 * ov.missing_denom * double(m));
    r.params["missing_target"] = target;
    r.params["missing_achieved"] = r.missing_edges;
    r.params["tries_used"] = sample.tries_used;
    r.graph = std::move(g);
    return r;
}

json SecondRegimeParams::to_json() const {
    return json{{"n", n},         {"m", m},
                {"n_prime", n_prime}, {"p", p},
                {"k", k},         {"v1", v1},
                {"v2", v2},       {"v3", v3},
                {"reserve", reserve},
                {"r", d.r},       {"s", d.s},
                {"t", d.t},       {"delta1", delta1},
                {"delta2", delta2},
                {"feasible", feasible}, {"reason", reason},
                {"buildable", buildable}, {"build_reason", build_reason}};
}

SecondRegimeParams second_regime_params(uint32_t n, uint64_t m, const ConstantOverrides& ov) {
    if (n < 4) throw InvalidArgument("second_regime_params needs n >= 4");
    if (m < 1) throw InvalidArgument("second_regime_params needs m >= 1");

    SecondRegimeParams p;
    p.n = n;
    p.m = m;

    double logn = std::log(double(n));
    double logn3 = logn * logn * logn;

    uint64_t v1_core = floor_resolved([&](mpfr_prec_t prec) {
        Interval nn = Interval::exact_u64(n, prec);
        Interval l = nn.log();
        return nn.div(l.mul(l).mul(l));
    });
    p.reserve = uint32_t(floor_resolved([&](mpfr_prec_t prec) {
        return Interval::exact_u64(n, prec).pow(Interval::exact_double(0.8, prec));
    }));
    p.k = n - uint32_t(v1_core);
    p.v1 = uint32_t(v1_core) + p.reserve;

    if (cmp_int_vs_nlogn(m, n) < 0) {
        // n' = 32 m log(n log n / m) / log n, positive since n log n / m > 1
        p.n_prime = floor_resolved([&](mpfr_prec_t prec) {
            Interval nn = Interval::exact_u64(n, prec);
            Interval mm = Interval::exact_u64(m, prec);
            Interval ratio = nn.mul(nn.log()).div(mm);
            return Interval::exact_double(32.0 * ov.nprime_num, prec)
                .mul(mm)
                .mul(ratio.log())
                .div(nn.log());
        });
    } else {
        p.n_prime = 0;
    }
    p.v2 = uint32_t(std::min<uint64_t>(p.n_prime, n));
    p.v3 = int64_t(p.k) - int64_t(p.v1) - int64_t(p.v2);

    p.p = std::pow(double(m), 3) / (std::pow(double(n), 3) * logn3);
    uint64_t rt = floor_resolved([&](mpfr_prec_t prec) {
        return Interval::exact_u64(n, prec).pow(Interval::exact_double(0.75, prec));
    });
    p.d.r = p.d.t = uint32_t(std::min<uint64_t>(rt, UINT32_MAX));
    p.d.s = 0;
    if (p.p > 0 && p.p < 1)
        p.d.s = uint32_t(std::max(1.0, std::ceil(logn / (2.0 * std::log(1.0 / p.p)))));
    if (p.n_prime >= 1) p.delta1 = uint64_t(std::ceil(2.0 * double(m) / double(p.n_prime)));
    p.delta2 = uint64_t(std::ceil(2.0 * double(m) * logn3 / double(n)));

    if (n > 2 * m) {
        p.reason = "below second-regime range (m < n/2)";
    } else if (cmp_scaled_vs_nlog(1024.0 * ov.m_cap_denom, m, n, n) > 0) {
        p.reason = "above second-regime range (m > n log n / 2^10)";
    } else if (3 * p.n_prime > 2 * uint64_t(n)) {
        p.reason = "n' > (2/3) n";
    }
    p.feasible = p.reason.empty();

    if (p.v3 < 0) {
        p.build_reason = "blocks exceed k (v3 < 0)";
    } else if (p.n_prime < 1) {
        p.build_reason = "n' < 1";
    } else if (!(p.p > 0.0) || p.p >= 0.5) {
        p.build_reason = "p outside (0, 1/2)";
    } else if (p.d.s < 1) {
        p.build_reason = "s < 1";
    } else if (p.d.r < 1 || p.d.t < 1) {
        p.build_reason = "r or t < 1";
    }
    p.buildable = p.build_reason.empty();
    return p;
}

namespace {

ConstructionReport build_second_regime_impl(uint32_t n, uint64_t m, uint64_t seed,
                                            const ConstantOverrides& ov, const BuildOptions& opts,
                                            uint32_t depth);

bool base_case_applies(uint32_t n, uint64_t m, const ConstantOverrides& ov) {
    if (m >= pairs_of(n)) return true;
    if (m < 2) return true;  // log m <= 0: the cap n <= 2^11 m/log m is unbounded
    // n <= 2^11 m / log m  <=>  n log m <= 2^11 m
    return cmp_scaled_vs_nlog(2048.0 * ov.base_num, m, n, m) >= 0;
}

// Inner (n', m)-universal graph for the recursion: complete-graph base case,
// recursive second-regime construction when its window is open, otherwise an
// honest complete-graph fallback.
ConstructionReport build_inner(uint32_t n_prime, uint64_t m, uint64_t seed,
                               const ConstantOverrides& ov, const BuildOptions& opts,
                               uint32_t depth) {
    if (n_prime <= 1 || base_case_applies(n_prime, m, ov))
        return clique_report(n_prime, "recursion base case");
    SecondRegimeParams inner = second_regime_params(n_prime, m, ov);
    if (inner.feasible && inner.buildable)
        return build_second_regime_impl(n_prime, m, seed, ov, opts, depth);
    return clique_report(n_prime, "inner regime infeasible (" +
                                      (inner.feasible ? inner.build_reason : inner.reason) +
                                      "); complete graph used");
}

ConstructionReport build_second_regime_impl(uint32_t n, uint64_t m, uint64_t seed,
                                            const ConstantOverrides& ov, const BuildOptions& opts,
                                            uint32_t depth) {
    if (depth > opts.depth_cap)
        throw RecursionDepthExceeded("second-regime recursion exceeded depth cap");
    SecondRegimeParams params = second_regime_params(n, m, ov);
    if (!params.feasible) throw RegimeInfeasible(params.reason);
    if (!params.buildable) throw RegimeInfeasible(params.build_reason);
    check_graph_cap(n, opts);

    ConstructionReport inner =
        build_inner(params.v2, m, Rng::derive_seed(seed, 1), ov, opts, depth + 1);

    // base random layer over all k vertices: at most n^2 p edges, and the
    // domination certificate only when the greedy V3 phase can actually run
    uint64_t edge_cap = uint64_t(double(n) * double(n) * params.p);
    bool domination_live = params.v3 > int64_t(params.reserve);
    Graph base;
    std::optional<CertLevel> cert;
    if (domination_live) {
        SampleResult s = sample_with_requirements(GnpSpec{params.k, params.p, Rng::derive_seed(seed, 2)},
                                                  params.d, 0, opts.budget, opts.exact_opts, edge_cap);
        base = std::move(s.graph);
        cert = s.cert;
    } else {
        bool found = false;
        for (uint32_t t = 0; t < opts.budget.max_tries && !found; ++t) {
            Graph g = sample_gnp(GnpSpec{params.k, params.p, Rng::derive_seed(Rng::derive_seed(seed, 2), t)});
            if (g.m() <= edge_cap) {
                base = std::move(g);
                found = true;
            }
        }
        if (!found) throw BudgetExhausted("no sample met the edge cap " + std::to_string(edge_cap),
                                          std::nullopt);
    }

    Graph gk = base;
    for (uint32_t v = 0; v < params.v1; ++v)
        for (uint32_t u = 0; u < params.k; ++u)
            if (u != v) gk.set_edge(v, u, true);
    const Graph& ig = *inner.graph;
    for (uint32_t u = 0; u < ig.n(); ++u)
        for (uint32_t v : ig.neighbors(u))
            if (u < v) gk.set_edge(params.v1 + u, params.v1 + v, true);

    Graph g = add_full_vertices(gk, n - params.k);

    ConstructionReport r;
    r.regime = RegimeTag::SecondRegime;
    r.edge_count = g.m();
    r.missing_edges = pairs_of(n) - g.m();
    r.cert = cert;
    r.recursion_depth = inner.recursion_depth + 1;
    r.params = params.to_json();
    r.params["overrides"] = ov.to_json();
    r.params["layout"] =
        json{{"v1_lo", 0},         {"v1_hi", params.v1},
             {"v2_lo", params.v1}, {"v2_hi", params.v1 + params.v2},
             {"v3_lo", params.v1 + params.v2}, {"v3_hi", params.k},
             {"reserve", params.reserve},
             {"extra_full_lo", params.k}, {"extra_full_hi", n},
             {"r", params.d.r}, {"s", params.d.s}, {"t", params.d.t}};
    r.params["domination_certified"] = domination_live;
    if (!domination_live)
        r.params["domination_note"] = "V3 greedy phase idle at this scale (v3 <= reserve)";
    r.params["inner"] = json{{"regime", regime_tag_name(inner.regime)},
                             {"n", params.v2},
                             {"edges", inner.edge_count}};
    r.params["edge_cap"] = edge_cap;
    r.graph = std::move(g);
    return r;
}

ConstructionReport build_impl(uint32_t n, uint64_t m, double epsilon, uint64_t seed,
                              const ConstantOverrides& ov, const BuildOptions& opts,
                              uint32_t depth) {
    if (depth > opts.depth_cap) throw RecursionDepthExceeded("build recursion exceeded depth cap");
    if (n < 1) throw InvalidArgument("build needs n >= 1");
    uint64_t pairs = pairs_of(n);
    if (m > pairs) throw InvalidArgument("m exceeds C(n,2)");
    check_graph_cap(n, opts);

    if (m == pairs) return clique_report(n, "m = C(n,2): only K_n is universal");

    if (2 * m < n) {
        // small-m reduction
        ConstructionReport r;
        r.regime = RegimeTag::SmallM;
        if (m == 0) {
            r.graph = Graph(n);
            r.edge_count = 0;
            r.missing_edges = pairs;
            r.params = json{{"n", n}, {"m", 0}, {"note", "empty graph is (n,0)-universal"}};
            return r;
        }
        ConstructionReport inner =
            build_impl(uint32_t(2 * m), m, epsilon, Rng::derive_seed(seed, 3), ov, opts, depth + 1);
        Graph g = disjoint_union(*inner.graph, Graph(n - uint32_t(2 * m)));
        r.edge_count = g.m();
        r.missing_edges = pairs - g.m();
        r.cert = inner.cert;
        r.recursion_depth = inner.recursion_depth;
        r.params = json{{"n", n},
                        {"m", m},
                        {"isolated_padding", n - 2 * m},
                        {"inner", inner.to_json()}};
        r.graph = std::move(g);
        return r;
    }

    SecondRegimeParams second = second_regime_params(std::max(n, 4u), m, ov);
    if (n >= 4 && second.feasible && second.buildable)
        return build_second_regime_impl(n, m, seed, ov, opts, depth);

    if (n >= 4) {
        FirstRegimeParams first = first_regime_params(n, m, epsilon, ov);
        std::string why;
        if (first_regime_buildable(first, &why))
            return build_first_regime(n, m, epsilon, seed, ov, opts);
    }

    if (base_case_applies(n, m, ov)) return clique_report(n, "recursion base case");

    // transition band: halve until a regime applies
    return build_doubling(n, m, [&](uint32_t half, uint64_t mm) {
        return build_impl(half, mm, epsilon, Rng::derive_seed(seed, 4 + half), ov, opts, depth + 1);
    });
}

}  // namespace

ConstructionReport build_second_regime(uint32_t n, uint64_t m, uint64_t seed,
                                       const ConstantOverrides& ov, const BuildOptions& opts) {
    return build_second_regime_impl(n, m, seed, ov, opts, 0);
}

ConstructionReport build_small_m(uint32_t n, uint64_t m, double epsilon, uint64_t seed,
                                 const ConstantOverrides& ov, const BuildOptions& opts) {
    if (2 * m >= n) throw InvalidArgument("build_small_m needs m < n/2");
    return build_impl(n, m, epsilon, seed, ov, opts, 0);
}

ConstructionReport build_doubling(
    uint32_t n, uint64_t m,
    const std::function<ConstructionReport(uint32_t, uint64_t)>& inner_builder) {
    if (n < 2) throw InvalidArgument("build_doubling needs n >= 2");
    uint32_t a = (n + 1) / 2, b = n / 2;
    uint64_t ma = std::min(m, pairs_of(a)), mb = std::min(m, pairs_of(b));
    ConstructionReport ra = inner_builder(a, ma);
    ConstructionReport rb = (a == b && ma == mb) ? ra : inner_builder(b, mb);
    if (!ra.graph || !rb.graph)
        throw RegimeInfeasible("doubling inner builder produced no graph");

    Graph g = disjoint_union(*ra.graph, *rb.graph);
    for (uint32_t i = 0; i < a; ++i)
        for (uint32_t j = 0; j < b; ++j) g.add_edge(i, a + j);

    ConstructionReport r;
    r.regime = RegimeTag::Doubling;
    r.edge_count = g.m();
    r.missing_edges = pairs_of(n) - g.m();
    r.recursion_depth = std::max(ra.recursion_depth, rb.recursion_depth) + 1;
    r.params = json{{"n", n},
                    {"m", m},
                    {"half_a", a},
                    {"half_b", b},
                    {"inner_a", json{{"regime", regime_tag_name(ra.regime)}, {"edges", ra.edge_count}}},
                    {"inner_b", json{{"regime", regime_tag_name(rb.regime)}, {"edges", rb.edge_count}}}};
    if (ra.cert) r.cert = ra.cert;
    r.graph = std::move(g);
    return r;
}

ConstructionReport build(uint32_t n, uint64_t m, double epsilon, uint64_t seed,
                         const ConstantOverrides& ov, const BuildOptions& opts) {
    return build_impl(n, m, epsilon, seed, ov, opts, 0);
}

FirstRegimeHost first_regime_host_from_report(const Graph& g, const json& report) {
    const json& params = report.contains("params") ? report.at("params") : report;
    const json& layout = params.at("layout");
    FirstRegimeHost host;
    host.graph = g;
    uint32_t f_lo = layout.at("f_lo"), f_hi = layout.at("f_hi");
    uint32_t v_lo = layout.at("v_lo"), v_hi = layout.at("v_hi");
    for (uint32_t v = f_lo; v < f_hi; ++v) host.F.push_back(v);
    if (layout.contains("extra_full_lo"))
        for (uint32_t v = layout.at("extra_full_lo").get<uint32_t>();
             v < layout.at("extra_full_hi").get<uint32_t>(); ++v)
            host.F.push_back(v);
    for (uint32_t v = v_lo; v < v_hi; ++v) host.V.push_back(v);
    std::sort(host.F.begin(), host.F.end());
    host.d = DominationParams{uint32_t(params.at("r").get<uint64_t>()),
                              uint32_t(params.at("s").get<uint64_t>()),
                              uint32_t(params.at("t").get<uint64_t>())};
    return host;
}

BlockHost block_host_from_report(const Graph& g, const json& report) {
    const json& params = report.contains("params") ? report.at("params") : report;
    const json& layout = params.at("layout");
    BlockHost host;
    host.graph = g;
    for (uint32_t v = layout.at("v1_lo").get<uint32_t>(); v < layout.at("v1_hi").get<uint32_t>(); ++v)
        host.V1.push_back(v);
    if (layout.contains("extra_full_lo"))
        for (uint32_t v = layout.at("extra_full_lo").get<uint32_t>();
             v < layout.at("extra_full_hi").get<uint32_t>(); ++v)
            host.V1.push_back(v);
    for (uint32_t v = layout.at("v2_lo").get<uint32_t>(); v < layout.at("v2_hi").get<uint32_t>(); ++v)
        host.V2.push_back(v);
    for (uint32_t v = layout.at("v3_lo").get<uint32_t>(); v < layout.at("v3_hi").get<uint32_t>(); ++v)
        host.V3.push_back(v);
    std::sort(host.V1.begin(), host.V1.end());
    host.reserve = layout.at("reserve");
    host.d = DominationParams{layout.at("r").get<uint32_t>(), layout.at("s").get<uint32_t>(),
                              layout.at("t").get<uint32_t>()};
    return host;
}

}  // namespace ug
