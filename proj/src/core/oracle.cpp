#include "core/oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "core/embed.hpp"
#include "core/errors.hpp"
#include "core/rng.hpp"

namespace ug {

namespace {

constexpr uint32_t kCanonicalMaxN = 10;

// Branch-and-bound minimization of the adjacency encoding. rows[v] is the
// neighborhood bitmask of v (n <= 10, so 16 bits suffice). Positions are
// assigned left to right; placing position j fixes the j new bits against
// already-placed vertices, so prefixes compare against the incumbent.
struct CanonicalSearch {
    uint32_t n;
    const uint16_t* rows;
    uint32_t total_bits;
    uint64_t best = UINT64_MAX;
    std::array<uint32_t, kCanonicalMaxN> chosen{};
    uint16_t used = 0;

    uint64_t run() {
        descend(0, 0, 0);
        return best;
    }

    void descend(uint32_t level, uint64_t prefix, uint32_t bits) {
        if (level == n) {
            if (prefix < best) best = prefix;
            return;
        }
        // candidates ordered by the bits they would append, then by index
        std::array<std::pair<uint64_t, uint32_t>, kCanonicalMaxN> cand;
        uint32_t count = 0;
        for (uint32_t v = 0; v < n; ++v) {
            if (used & (uint16_t(1) << v)) continue;
            uint64_t newbits = 0;
            for (uint32_t i = 0; i < level; ++i)
                newbits = (newbits << 1) | ((rows[v] >> chosen[i]) & 1);
            cand[count++] = {newbits, v};
        }
        std::sort(cand.begin(), cand.begin() + count);
        for (uint32_t c = 0; c < count; ++c) {
            uint64_t prefix_new = (prefix << level) | cand[c].first;
            uint32_t bits_new = bits + level;
            if (best != UINT64_MAX && prefix_new > (best >> (total_bits - bits_new))) break;
            chosen[level] = cand[c].second;
            used |= uint16_t(1) << cand[c].second;
            descend(level + 1, prefix_new, bits_new);
            used &= ~(uint16_t(1) << cand[c].second);
        }
    }
};

uint64_t canonical_rows(uint32_t n, const uint16_t* rows) {
    if (n <= 1) return 0;
    CanonicalSearch s{n, rows, n * (n - 1) / 2};
    return s.run();
}

void graph_to_rows(const Graph& g, uint16_t* rows) {
    for (uint32_t v = 0; v < g.n(); ++v) {
        rows[v] = 0;
        for (uint32_t u : g.neighbors(v)) rows[v] |= uint16_t(1) << u;
    }
}

uint64_t pair_count(uint32_t n) { return uint64_t(n) * (n - 1) / 2; }

}  // namespace

uint64_t canonical_form(const Graph& g) {
    if (g.n() > kCanonicalMaxN)
        throw EnumerationTooLarge("canonical labeling is capped at n = 10");
    uint16_t rows[kCanonicalMaxN] = {};
    graph_to_rows(g, rows);
    return canonical_rows(g.n(), rows);
}

Graph graph_from_encoding(uint32_t n, uint64_t encoding) {
    Graph g(n);
    uint32_t total = uint32_t(pair_count(n));
    uint32_t q = 0;
    for (uint32_t v = 1; v < n; ++v)
        for (uint32_t u = 0; u < v; ++u, ++q)
            if ((encoding >> (total - 1 - q)) & 1) g.add_edge(u, v);
    return g;
}

uint64_t count_labeled(uint32_t n, uint64_t m) {
    uint64_t pairs = pair_count(n);
    if (m > pairs) return 0;
    unsigned __int128 value = 1;
    uint64_t k = std::min(m, pairs - m);
    for (uint64_t i = 1; i <= k; ++i) {
        value = value * (pairs - k + i) / i;
        if (value > (unsigned __int128)UINT64_MAX) return UINT64_MAX;
    }
    return uint64_t(value);
}

void for_each_labeled(uint32_t n, uint64_t m, const EnumLimits& limits,
                      const std::function<bool(const Graph&)>& visit) {
    uint64_t pairs = pair_count(n);
    if (m > pairs) return;
    if (count_labeled(n, m) > limits.labeled_cap)
        throw EnumerationTooLarge("labeled enumeration exceeds the configured cap");

    // pairs ranked row-major: (0,1), (0,2), ..., (0,n-1), (1,2), ...
    std::vector<std::pair<uint32_t, uint32_t>> rank_to_pair;
    rank_to_pair.reserve(pairs);
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v) rank_to_pair.emplace_back(u, v);

    if (m == 0) {
        visit(Graph(n));
        return;
    }
    std::vector<uint64_t> pick(m);
    for (uint64_t i = 0; i < m; ++i) pick[i] = i;
    while (true) {
        Graph g(n);
        for (uint64_t r : pick) g.add_edge(rank_to_pair[r].first, rank_to_pair[r].second);
        if (!visit(g)) return;
        int64_t pos = int64_t(m) - 1;
        while (pos >= 0 && pick[pos] == pairs - m + pos) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (uint64_t i = uint64_t(pos) + 1; i < m; ++i) pick[i] = pick[i - 1] + 1;
    }
}

namespace {

std::map<std::pair<uint32_t, uint64_t>, std::vector<uint64_t>> g_class_cache;
std::recursive_mutex g_class_mutex;

const std::vector<uint64_t>& class_encodings_locked(uint32_t n, uint64_t m) {
    auto key = std::make_pair(n, m);
    auto it = g_class_cache.find(key);
    if (it != g_class_cache.end()) return it->second;

    std::vector<uint64_t> out;
    if (m <= pair_count(n)) {
        if (n <= 1) {
            if (m == 0) out.push_back(0);
        } else {
            std::vector<uint64_t> seen;
            uint32_t parent_n = n - 1;
            uint32_t parent_bits = uint32_t(pair_count(parent_n));
            uint32_t d_max = uint32_t(std::min<uint64_t>(parent_n, m));
            for (uint32_t d = 0; d <= d_max; ++d) {
                const std::vector<uint64_t>& parents = class_encodings_locked(parent_n, m - d);
                std::vector<uint32_t> pick(d);
                for (const uint64_t parent : parents) {
                    uint16_t rows[kCanonicalMaxN] = {};
                    uint32_t q = 0;
                    for (uint32_t v = 1; v < parent_n; ++v)
                        for (uint32_t u = 0; u < v; ++u, ++q)
                            if ((parent >> (parent_bits - 1 - q)) & 1) {
                                rows[u] |= uint16_t(1) << v;
                                rows[v] |= uint16_t(1) << u;
                            }
                    // attach the new vertex to every d-subset of the old ones
                    for (uint32_t i = 0; i < d; ++i) pick[i] = i;
                    while (true) {
                        uint16_t extra = 0;
                        for (uint32_t i = 0; i < d; ++i) extra |= uint16_t(1) << pick[i];
                        rows[parent_n] = extra;
                        for (uint32_t v = 0; v < parent_n; ++v)
                            if (extra & (uint16_t(1) << v)) rows[v] |= uint16_t(1) << parent_n;
                        seen.push_back(canonical_rows(n, rows));
                        for (uint32_t v = 0; v < parent_n; ++v)
                            rows[v] &= ~(uint16_t(1) << parent_n);
                        if (d == 0) break;
                        int32_t pos = int32_t(d) - 1;
                        while (pos >= 0 && pick[pos] == parent_n - d + uint32_t(pos)) --pos;
                        if (pos < 0) break;
                        ++pick[pos];
                        for (uint32_t i = uint32_t(pos) + 1; i < d; ++i) pick[i] = pick[i - 1] + 1;
                    }
                }
            }
            std::sort(seen.begin(), seen.end());
            seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
            out = std::move(seen);
        }
    }
    return g_class_cache.emplace(key, std::move(out)).first->second;
}

}  // namespace

const std::vector<uint64_t>& class_encodings(uint32_t n, uint64_t m, const EnumLimits& limits) {
    if (n > limits.iso_n_cap || n > kCanonicalMaxN)
        throw EnumerationTooLarge("isomorphism-class enumeration is capped at n = " +
                                  std::to_string(std::min(limits.iso_n_cap, kCanonicalMaxN)));
    std::lock_guard<std::recursive_mutex> lock(g_class_mutex);
    return class_encodings_locked(n, m);
}

std::vector<Graph> enumerate_graphs(uint32_t n, uint64_t m, EnumerationMode mode,
                                    const EnumLimits& limits) {
    std::vector<Graph> out;
    if (mode == EnumerationMode::Labeled) {
        for_each_labeled(n, m, limits, [&](const Graph& g) {
            out.push_back(g);
            return true;
        });
    } else {
        for (uint64_t enc : class_encodings(n, m, limits)) out.push_back(graph_from_encoding(n, enc));
    }
    return out;
}

UniversalityWitness is_universal(const Graph& host, uint32_t n, uint64_t m,
                                 const EnumLimits& limits) {
    if (host.n() < n) throw InvalidArgument("host has fewer vertices than the targets");
    UniversalityWitness w;
    if (m > pair_count(n)) {  // no targets exist
        w.verdict = true;
        return w;
    }
    for (uint64_t enc : class_encodings(n, m, limits)) {
        Graph target = graph_from_encoding(n, enc);
        ++w.targets_checked;
        if (!embed_subgraph_oracle(target, host)) {
            w.verdict = false;
            w.failing_target = std::move(target);
            return w;
        }
    }
    w.verdict = true;
    return w;
}

UniversalityWitness spot_check_universal(const Graph& host, uint32_t n, uint64_t m,
                                         uint32_t samples, uint64_t seed) {
    if (host.n() < n) throw InvalidArgument("host has fewer vertices than the targets");
    uint64_t pairs = pair_count(n);
    if (m > pairs) throw InvalidArgument("m exceeds the number of vertex pairs");
    std::vector<std::pair<uint32_t, uint32_t>> rank_to_pair;
    rank_to_pair.reserve(pairs);
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v) rank_to_pair.emplace_back(u, v);

    UniversalityWitness w;
    for (uint32_t i = 0; i < samples; ++i) {
        Rng rng(Rng::derive_seed(seed, i));
        Graph target(n);
        for (uint32_t r : rng.sample_distinct(uint32_t(pairs), uint32_t(m)))
            target.add_edge(rank_to_pair[r].first, rank_to_pair[r].second);
        ++w.targets_checked;
        if (!embed_subgraph_oracle(target, host)) {
            w.verdict = false;
            w.failing_target = std::move(target);
            return w;
        }
    }
    w.verdict = true;
    return w;
}

ExactG exact_g(uint32_t n, uint64_t m, const EnumLimits& limits) {
    if (n > limits.exact_g_n_cap)
        throw EnumerationTooLarge("exact_g is capped at n = " + std::to_string(limits.exact_g_n_cap));
    uint64_t pairs = pair_count(n);
    if (m > pairs) throw InvalidArgument("m exceeds the number of vertex pairs");
    if (m == 0) return ExactG{0, Graph(n)};
    for (uint64_t t = m; t <= pairs; ++t) {
        for (uint64_t enc : class_encodings(n, t, limits)) {
            Graph host = graph_from_encoding(n, enc);
            if (is_universal(host, n, m, limits).verdict) return ExactG{t, std::move(host)};
        }
    }
    throw Error(ErrorCode::Internal, "exact_g found no universal host; K_n should always qualify");
}

uint64_t exact_f(uint32_t n, uint64_t e, const EnumLimits& limits) {
    uint64_t pairs = pair_count(n);
    if (e > pairs) throw InvalidArgument("e exceeds the number of vertex pairs");
    return pairs - exact_g(n, pairs - e, limits).value;
}

uint64_t exact_f_direct(uint32_t n, uint64_t e, const EnumLimits& limits) {
    if (n > limits.exact_g_n_cap)
        throw EnumerationTooLarge("exact_f is capped at n = " + std::to_string(limits.exact_g_n_cap));
    uint64_t pairs = pair_count(n);
    if (e > pairs) throw InvalidArgument("e exceeds the number of vertex pairs");
    std::vector<Graph> targets = enumerate_graphs(n, e, EnumerationMode::UpToIsomorphism, limits);
    for (uint64_t hm = pairs + 1; hm-- > 0;) {
        for (uint64_t enc : class_encodings(n, hm, limits)) {
            Graph h = graph_from_encoding(n, enc);
            bool unavoidable = true;
            for (const Graph& target : targets)
                if (!embed_subgraph_oracle(h, target)) {
                    unavoidable = false;
                    break;
                }
            if (unavoidable) return hm;
        }
    }
    return 0;
}

}  // namespace ug
