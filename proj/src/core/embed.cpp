#include "core/embed.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "core/errors.hpp"

namespace ug {

namespace {

using Mask = std::vector<uint64_t>;

void mask_set(Mask& m, uint32_t v) { m[v >> 6] |= uint64_t(1) << (v & 63); }
void mask_clear(Mask& m, uint32_t v) { m[v >> 6] &= ~(uint64_t(1) << (v & 63)); }
bool mask_test(const Mask& m, uint32_t v) { return (m[v >> 6] >> (v & 63)) & 1; }

uint32_t lowest_bit(const Mask& m) {
    for (size_t w = 0; w < m.size(); ++w)
        if (m[w]) return uint32_t(w * 64 + std::countr_zero(m[w]));
    return UINT32_MAX;
}

}  // namespace

std::optional<Embedding> embed_subgraph_oracle(const Graph& pattern, const Graph& host) {
    uint32_t pn = pattern.n(), hn = host.n();
    if (pn > hn) throw PatternTooLarge("pattern has more vertices than the host");
    if (pattern.m() > host.m()) return std::nullopt;

    std::vector<uint32_t> order(pn);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return pattern.degree(a) > pattern.degree(b);
    });

    // degree multiset domination is necessary for containment
    {
        std::vector<uint32_t> hd(hn);
        for (uint32_t v = 0; v < hn; ++v) hd[v] = host.degree(v);
        std::sort(hd.rbegin(), hd.rend());
        for (uint32_t i = 0; i < pn; ++i)
            if (pattern.degree(order[i]) > hd[i]) return std::nullopt;
    }

    size_t words = host.words_per_row();
    Mask all(words, 0);
    for (uint32_t v = 0; v < hn; ++v) mask_set(all, v);

    // host vertices with degree >= the pattern vertex's degree, per position
    std::vector<Mask> deg_ok(pn, Mask(words, 0));
    for (uint32_t i = 0; i < pn; ++i) {
        uint32_t need = pattern.degree(order[i]);
        for (uint32_t v = 0; v < hn; ++v)
            if (host.degree(v) >= need) mask_set(deg_ok[i], v);
    }

    // position of each pattern vertex in the order, to find placed neighbors
    std::vector<uint32_t> pos(pn);
    for (uint32_t i = 0; i < pn; ++i) pos[order[i]] = i;

    std::vector<uint32_t> image(pn, UINT32_MAX);
    Mask used(words, 0);

    // first position from which every remaining pattern vertex is isolated
    uint32_t isolated_from = pn;
    while (isolated_from > 0 && pattern.degree(order[isolated_from - 1]) == 0) --isolated_from;

    std::function<bool(uint32_t)> place = [&](uint32_t at) -> bool {
        if (at == pn) return true;
        if (at >= isolated_from) {
            // remaining pattern vertices are isolated: fill with free hosts ascending
            Mask free(words);
            for (size_t w = 0; w < words; ++w) free[w] = all[w] & ~used[w];
            for (uint32_t i = at; i < pn; ++i) {
                uint32_t v = lowest_bit(free);
                image[order[i]] = v;
                mask_clear(free, v);
            }
            return true;
        }
        uint32_t pv = order[at];
        Mask cand = deg_ok[at];
        for (size_t w = 0; w < words; ++w) cand[w] &= ~used[w];
        for (uint32_t nb : pattern.neighbors(pv)) {
            if (pos[nb] >= at) continue;  // not placed yet
            const uint64_t* row = host.row(image[nb]);
            for (size_t w = 0; w < words; ++w) cand[w] &= row[w];
        }
        for (size_t w = 0; w < words; ++w) {
            uint64_t bits = cand[w];
            while (bits) {
                uint32_t v = uint32_t(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
                image[pv] = v;
                mask_set(used, v);
                if (place(at + 1)) return true;
                mask_clear(used, v);
                image[pv] = UINT32_MAX;
            }
        }
        return false;
    };

    if (!place(0)) return std::nullopt;
    Embedding e{pn, image};
    if (!embedding_valid(e, pattern, host)) throw Error(ErrorCode::Internal, "oracle produced an invalid embedding");
    return e;
}

PeelResult peel_min_degree(const Graph& h, uint32_t ell) {
    std::vector<bool> alive(h.n(), true);
    std::vector<uint32_t> deg(h.n());
    for (uint32_t v = 0; v < h.n(); ++v) deg[v] = h.degree(v);
    uint32_t alive_count = h.n();

    PeelResult out;
    for (uint32_t step = 0; step < ell; ++step) {
        if (alive_count == 0)
            throw ShrunkBelowTarget("graph exhausted after " + std::to_string(step) + " of " +
                                    std::to_string(ell) + " peels");
        uint32_t best = UINT32_MAX;
        for (uint32_t v = 0; v < h.n(); ++v)
            if (alive[v] && (best == UINT32_MAX || deg[v] < deg[best])) best = v;
        out.peeled.push_back(best);

        std::vector<uint32_t> gone{best};
        for (uint32_t nb : h.neighbors(best))
            if (alive[nb]) gone.push_back(nb);
        for (uint32_t v : gone) {
            alive[v] = false;
            --alive_count;
        }
        for (uint32_t v : gone)
            for (uint32_t nb : h.neighbors(v))
                if (alive[nb]) --deg[nb];
    }

    for (uint32_t v = 0; v < h.n(); ++v)
        if (alive[v]) out.survivors.push_back(v);
    for (uint32_t v = 0; v < h.n(); ++v)
        if (!alive[v]) out.removed.push_back(v);
    out.survivor_graph = induced_subgraph(h, out.survivors);
    return out;
}

LiftResult embed_via_full_vertices(const Graph& h, uint32_t k, const Graph& inner_universal,
                                   const InnerEmbedFn& embed_inner) {
    uint32_t n = h.n();
    uint64_t m = h.m();
    if (k == 0 || k >= n) throw RegimeInfeasible("lift needs 0 < k < n");
    uint64_t ell = uint64_t(k) * (n - k) / (2 * m + k);
    if (ell >= k) throw RegimeInfeasible("peel count ell >= k; lift arithmetic degenerate");
    if (inner_universal.n() != k - ell)
        throw RegimeInfeasible("inner universal graph must have k - ell = " + std::to_string(k - ell) +
                               " vertices, got " + std::to_string(inner_universal.n()));

    PeelResult peel = peel_min_degree(h, uint32_t(ell));
    uint32_t q = uint32_t(peel.survivors.size());
    if (q < k - ell) throw RegimeInfeasible("peeling left fewer than k - ell survivors");

    VertexSet kept(peel.survivors.begin(), peel.survivors.begin() + (k - ell));
    VertexSet overflow(peel.survivors.begin() + (k - ell), peel.survivors.end());

    VertexSet to_full;  // removed minus peeled, plus survivor overflow
    {
        std::vector<bool> is_peeled(n, false);
        for (uint32_t v : peel.peeled) is_peeled[v] = true;
        for (uint32_t v : peel.removed)
            if (!is_peeled[v]) to_full.push_back(v);
        to_full.insert(to_full.end(), overflow.begin(), overflow.end());
        std::sort(to_full.begin(), to_full.end());
    }
    if (to_full.size() > n - k)
        throw RegimeInfeasible("full-degree capacity exceeded; lift preconditions violated");

    LiftResult res;
    res.ell = ell;
    res.host = add_full_vertices(disjoint_union(inner_universal, Graph(uint32_t(ell))), n - k);

    Embedding emb{n, std::vector<uint32_t>(n, UINT32_MAX)};
    Graph inner_pattern = induced_subgraph(h, kept);
    std::optional<Embedding> inner_emb = embed_inner(inner_pattern);
    if (!inner_emb)
        throw InnerEmbeddingFailed("inner embedding failed; the inner graph is not (k-ell,m)-universal");
    if (!embedding_valid(*inner_emb, inner_pattern, inner_universal))
        throw InnerEmbeddingFailed("inner embedding is invalid against the inner universal graph");
    for (size_t i = 0; i < kept.size(); ++i) emb.map[kept[i]] = inner_emb->map[i];

    VertexSet peeled_sorted(peel.peeled.begin(), peel.peeled.end());
    std::sort(peeled_sorted.begin(), peeled_sorted.end());
    for (size_t i = 0; i < peeled_sorted.size(); ++i)
        emb.map[peeled_sorted[i]] = uint32_t(k - ell + i);  // spare slots

    for (size_t i = 0; i < to_full.size(); ++i) emb.map[to_full[i]] = uint32_t(k + i);

    if (!embedding_valid(emb, h, res.host))
        throw Error(ErrorCode::Internal, "lift produced an invalid embedding");
    res.embedding = std::move(emb);
    return res;
}

namespace {

// Shared engine for the greedy domination phase of both constructive
// embedders: repeatedly builds the S_v sets of unembedded pattern vertices,
// extracts a disjoint family collection greedily in ascending vertex order,
// and places the owner of the dominated family.
struct GreedyPhase {
    const Graph& h;
    const Graph& host;
    std::vector<uint32_t>& image;          // pattern -> host, UINT32_MAX = unplaced
    const std::vector<bool>& constrains;   // host vertex contributes to S_v
    Mask& free_slots;                      // host vertices this phase may fill
    std::ostream* trace;
    const char* phase_name;

    // Places `count` pattern vertices from `pending` (erased as placed).
    // Returns false with everything untouched-so-far intact when no
    // dominating pair exists for the current family collection.
    bool run(std::vector<uint32_t>& pending, uint32_t count) {
        for (uint32_t done = 0; done < count; ++done) {
            // S_v per pending vertex
            std::vector<VertexSet> sv(pending.size());
            int direct = -1;
            for (size_t i = 0; i < pending.size(); ++i) {
                for (uint32_t nb : h.neighbors(pending[i])) {
                    uint32_t img = image[nb];
                    if (img != UINT32_MAX && constrains[img]) sv[i].push_back(img);
                }
                std::sort(sv[i].begin(), sv[i].end());
                if (sv[i].empty() && direct < 0) direct = int(i);
            }
            if (direct >= 0) {
                // a common neighbor of nothing: take the lowest free slot
                uint32_t slot = lowest_bit(free_slots);
                if (slot == UINT32_MAX) throw SizeMismatch("no free host slot in greedy phase");
                place(pending, size_t(direct), slot, "direct");
                continue;
            }
            // greedy disjoint family extraction, ascending pattern index
            std::vector<size_t> owners;
            std::vector<VertexSet> families;
            Mask used(host.words_per_row(), 0);
            for (size_t i = 0; i < pending.size(); ++i) {
                bool disjoint = true;
                for (uint32_t v : sv[i])
                    if (mask_test(used, v)) {
                        disjoint = false;
                        break;
                    }
                if (!disjoint) continue;
                for (uint32_t v : sv[i]) mask_set(used, v);
                owners.push_back(i);
                families.push_back(sv[i]);
            }
            VertexSet R;
            for (size_t w = 0; w < free_slots.size(); ++w) {
                uint64_t bits = free_slots[w];
                while (bits) {
                    R.push_back(uint32_t(w * 64 + std::countr_zero(bits)));
                    bits &= bits - 1;
                }
            }
            auto pair = find_dominating_pair(host, R, families);
            if (!pair) return false;
            place(pending, owners[pair->second], pair->first, "dominated");
        }
        return true;
    }

    void place(std::vector<uint32_t>& pending, size_t idx, uint32_t slot, const char* how) {
        uint32_t pv = pending[idx];
        image[pv] = slot;
        mask_clear(free_slots, slot);
        pending.erase(pending.begin() + idx);
        if (trace) *trace << phase_name << ": h" << pv << " -> g" << slot << " (" << how << ")\n";
    }
};

std::vector<uint32_t> degree_desc_order(const Graph& h) {
    std::vector<uint32_t> order(h.n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return h.degree(a) > h.degree(b);
    });
    return order;
}

void check_partition(const Graph& g, std::initializer_list<const VertexSet*> parts) {
    std::vector<bool> seen(g.n(), false);
    size_t total = 0;
    for (const VertexSet* p : parts) {
        if (!is_sorted_unique(*p)) throw InvalidArgument("host blocks must be sorted and duplicate-free");
        for (uint32_t v : *p) {
            if (v >= g.n() || seen[v]) throw InvalidArgument("host blocks must partition the vertices");
            seen[v] = true;
        }
        total += p->size();
    }
    if (total != g.n()) throw InvalidArgument("host blocks must cover all vertices");
}

void check_full_degree(const Graph& g, const VertexSet& block, const char* name) {
    for (uint32_t v : block)
        if (g.degree(v) != g.n() - 1)
            throw InvalidArgument(std::string(name) + " vertex " + std::to_string(v) +
                                  " is not full-degree");
}

Embedding finish(const Graph& h, const Graph& host, std::vector<uint32_t> image) {
    Embedding e{h.n(), std::move(image)};
    if (!embedding_valid(e, h, host))
        throw Error(ErrorCode::Internal, "constructive embedder produced an invalid embedding");
    return e;
}

}  // namespace

void FirstRegimeHost::validate() const {
    check_partition(graph, {&F, &V});
    check_full_degree(graph, F, "F");
}

Embedding embed_first_regime(const Graph& h, const FirstRegimeHost& host, const EmbedOptions& opts) {
    host.validate();
    if (h.n() + host.d.r > host.graph.n())
        throw SizeMismatch("pattern must leave at least r host vertices unused");

    std::vector<uint32_t> order = degree_desc_order(h);
    std::vector<uint32_t> image(h.n(), UINT32_MAX);

    uint32_t f_half = std::min<uint32_t>(uint32_t(host.F.size() / 2), h.n());
    for (uint32_t i = 0; i < f_half; ++i) {
        image[order[i]] = host.F[i];
        if (opts.trace) *opts.trace << "phase1: h" << order[i] << " -> g" << host.F[i] << " (F)\n";
    }

    size_t words = host.graph.words_per_row();
    Mask v_free(words, 0);
    for (uint32_t v : host.V) mask_set(v_free, v);
    std::vector<bool> in_v(host.graph.n(), false);
    for (uint32_t v : host.V) in_v[v] = true;

    std::vector<uint32_t> pending;
    for (uint32_t i = f_half; i < h.n(); ++i) pending.push_back(order[i]);
    std::sort(pending.begin(), pending.end());

    uint32_t v_quota = uint32_t(std::min<size_t>(host.V.size() - host.d.r, pending.size()));
    GreedyPhase phase{h, host.graph, image, in_v, v_free, opts.trace, "phase2"};
    if (!phase.run(pending, v_quota)) {
        if (opts.fallback_to_oracle) {
            if (auto e = embed_subgraph_oracle(h, host.graph)) return *e;
            throw NoEmbedding("no dominating pair and the oracle found no embedding either");
        }
        throw NoDominatingPair("greedy domination step failed; host property insufficient at this scale");
    }

    uint32_t next_f = f_half;
    for (uint32_t pv : pending) {
        if (next_f >= host.F.size()) throw SizeMismatch("pattern leftovers exceed F capacity");
        image[pv] = host.F[next_f++];
        if (opts.trace) *opts.trace << "phase3: h" << pv << " -> g" << image[pv] << " (F)\n";
    }
    return finish(h, host.graph, std::move(image));
}

void BlockHost::validate() const {
    check_partition(graph, {&V1, &V2, &V3});
    check_full_degree(graph, V1, "V1");
    if (reserve > V1.size()) throw InvalidArgument("reserve exceeds |V1|");
}

Embedding embed_second_regime(const Graph& h, const BlockHost& host, const InnerEmbedFn& embed_inner,
                              const EmbedOptions& opts) {
    host.validate();
    if (h.n() > host.graph.n()) throw SizeMismatch("pattern larger than the host");

    std::vector<uint32_t> order = degree_desc_order(h);
    std::vector<uint32_t> image(h.n(), UINT32_MAX);
    uint32_t placed = 0;

    uint32_t c1 = uint32_t(host.V1.size()) - host.reserve;
    uint32_t take1 = std::min(c1, h.n());
    for (uint32_t i = 0; i < take1; ++i) {
        image[order[i]] = host.V1[i];
        if (opts.trace) *opts.trace << "phase1: h" << order[i] << " -> g" << host.V1[i] << " (V1)\n";
    }
    placed = take1;

    uint32_t take2 = uint32_t(std::min<size_t>(host.V2.size(), h.n() - placed));
    if (take2 > 0) {
        VertexSet block(order.begin() + placed, order.begin() + placed + take2);
        std::sort(block.begin(), block.end());
        Graph pattern2 = induced_subgraph(h, block);
        std::optional<Embedding> inner = embed_inner(pattern2);
        if (!inner) throw InnerEmbeddingFailed("V2 inner embedding failed");
        Graph inner_graph = induced_subgraph(host.graph, host.V2);
        if (!embedding_valid(*inner, pattern2, inner_graph))
            throw InnerEmbeddingFailed("V2 inner embedding is invalid against G[V2]");
        for (size_t i = 0; i < block.size(); ++i) image[block[i]] = host.V2[inner->map[i]];
        if (opts.trace) *opts.trace << "phase2: " << take2 << " vertices -> V2 via inner embedder\n";
    }
    placed += take2;

    std::vector<uint32_t> pending(order.begin() + placed, order.end());
    std::sort(pending.begin(), pending.end());

    uint32_t into_v3 =
        pending.size() > host.reserve ? uint32_t(pending.size() - host.reserve) : 0;
    if (into_v3 > host.V3.size()) throw SizeMismatch("pattern remainder exceeds V3 capacity");

    size_t words = host.graph.words_per_row();
    Mask v3_free(words, 0);
    for (uint32_t v : host.V3) mask_set(v3_free, v);
    std::vector<bool> constrains(host.graph.n(), false);
    for (uint32_t v : host.V2) constrains[v] = true;
    for (uint32_t v : host.V3) constrains[v] = true;

    GreedyPhase phase{h, host.graph, image, constrains, v3_free, opts.trace, "phase3"};
    if (!phase.run(pending, into_v3)) {
        if (opts.fallback_to_oracle) {
            if (auto e = embed_subgraph_oracle(h, host.graph)) return *e;
            throw NoEmbedding("no dominating pair and the oracle found no embedding either");
        }
        throw NoDominatingPair("greedy domination step failed; host property insufficient at this scale");
    }

    uint32_t next1 = take1;
    for (uint32_t pv : pending) {
        if (next1 >= host.V1.size()) throw SizeMismatch("stragglers exceed reserved V1 slots");
        image[pv] = host.V1[next1++];
        if (opts.trace) *opts.trace << "phase4: h" << pv << " -> g" << image[pv] << " (V1 reserve)\n";
    }
    return finish(h, host.graph, std::move(image));
}

}  // namespace ug
