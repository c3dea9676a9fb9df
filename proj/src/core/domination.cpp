#include "core/domination.hpp"

#include <algorithm>

#include "json.hpp"

#include "core/errors.hpp"
#include "core/precise.hpp"
#include "core/rng.hpp"

namespace ug {

namespace {

using Mask = std::vector<uint64_t>;

Mask make_mask(size_t words, const VertexSet& vs) {
    Mask m(words, 0);
    for (uint32_t v : vs) m[v >> 6] |= uint64_t(1) << (v & 63);
    return m;
}

bool row_contains(const uint64_t* row, const Mask& mask) {
    for (size_t w = 0; w < mask.size(); ++w)
        if ((row[w] & mask[w]) != mask[w]) return false;
    return true;
}

bool masks_disjoint(const Mask& a, const Mask& b) {
    for (size_t w = 0; w < a.size(); ++w)
        if (a[w] & b[w]) return false;
    return true;
}

void validate_inputs(const Graph& g, const VertexSet& R, const std::vector<VertexSet>& families) {
    size_t words = g.words_per_row();
    if (!is_sorted_unique(R)) throw InvalidArgument("R must be sorted and duplicate-free");
    for (uint32_t v : R)
        if (v >= g.n()) throw InvalidArgument("R vertex out of range");
    Mask seen = make_mask(words, R);
    for (const VertexSet& f : families) {
        if (!is_sorted_unique(f)) throw InvalidArgument("family must be sorted and duplicate-free");
        for (uint32_t v : f)
            if (v >= g.n()) throw InvalidArgument("family vertex out of range");
        Mask fm = make_mask(words, f);
        if (!masks_disjoint(seen, fm)) throw InvalidArgument("overlap among R and families");
        for (size_t w = 0; w < words; ++w) seen[w] |= fm[w];
    }
}

}  // namespace

std::string DominationCounterexample::to_json() const {
    nlohmann::json j;
    j["R"] = R;
    j["families"] = families;
    return j.dump();
}

std::optional<std::pair<uint32_t, uint32_t>> find_dominating_pair(
    const Graph& g, const VertexSet& R, const std::vector<VertexSet>& families) {
    validate_inputs(g, R, families);
    size_t words = g.words_per_row();
    for (uint32_t i = 0; i < families.size(); ++i) {
        Mask fm = make_mask(words, families[i]);
        for (uint32_t v : R)
            if (row_contains(g.row(v), fm)) return std::make_pair(v, i);
    }
    return std::nullopt;
}

namespace {

// Enumeration state for the exact check of one R-set: all s-subsets of the
// complement that no vertex of R dominates, listed in lexicographic order.
struct BadSetScan {
    const Graph& g;
    const std::vector<uint32_t>& avail;
    uint32_t s;
    const VertexSet& R;
    uint64_t* probes;
    uint64_t probe_cap;

    std::vector<VertexSet> bad_sets;
    std::vector<Mask> bad_masks;

    void run() {
        std::vector<uint32_t> pick(s);
        recurse(0, 0, pick);
    }

    void recurse(uint32_t depth, uint32_t start, std::vector<uint32_t>& pick) {
        if (depth == s) {
            VertexSet set(pick.begin(), pick.end());
            for (uint32_t i = 0; i < s; ++i) set[i] = avail[pick[i]];
            Mask fm = make_mask(g.words_per_row(), set);
            *probes += uint64_t(R.size()) * s;
            if (*probes > probe_cap) throw ExactCheckInfeasible("domination exact check exceeded probe cap");
            for (uint32_t v : R)
                if (row_contains(g.row(v), fm)) return;  // dominated; not a bad set
            bad_sets.push_back(std::move(set));
            bad_masks.push_back(std::move(fm));
            return;
        }
        for (uint32_t i = start; i + (s - depth) <= avail.size(); ++i) {
            pick[depth] = i;
            recurse(depth + 1, i + 1, pick);
        }
    }
};

// First t pairwise-disjoint bad sets in lexicographic order, if any.
bool pick_disjoint(const std::vector<Mask>& masks, uint32_t t, size_t start,
                   Mask& used, std::vector<uint32_t>& chosen) {
    if (chosen.size() == t) return true;
    for (size_t i = start; i < masks.size(); ++i) {
        if (!masks_disjoint(masks[i], used)) continue;
        for (size_t w = 0; w < used.size(); ++w) used[w] |= masks[i][w];
        chosen.push_back(uint32_t(i));
        if (pick_disjoint(masks, t, i + 1, used, chosen)) return true;
        chosen.pop_back();
        for (size_t w = 0; w < used.size(); ++w) used[w] &= ~masks[i][w];
    }
    return false;
}

}  // namespace

std::optional<DominationCounterexample> check_domination_exact(
    const Graph& g, const DominationParams& d, const ExactCheckOptions& opts) {
    if (d.r < 1 || d.s < 1 || d.t < 1) throw InvalidArgument("domination parameters must be >= 1");
    uint32_t n = g.n();
    if (uint64_t(d.r) + uint64_t(d.s) * d.t > n) return std::nullopt;  // vacuous

    uint64_t probes = 0;
    std::vector<uint32_t> rpick(d.r);
    VertexSet R(d.r);

    // R-sets in lexicographic order
    for (uint32_t i = 0; i < d.r; ++i) rpick[i] = i;
    while (true) {
        for (uint32_t i = 0; i < d.r; ++i) R[i] = rpick[i];
        std::vector<uint32_t> avail;
        avail.reserve(n - d.r);
        size_t ri = 0;
        for (uint32_t v = 0; v < n; ++v) {
            if (ri < R.size() && R[ri] == v) {
                ++ri;
            } else {
                avail.push_back(v);
            }
        }

        BadSetScan scan{g, avail, d.s, R, &probes, opts.probe_cap, {}, {}};
        scan.run();
        if (scan.bad_sets.size() >= d.t) {
            Mask used(g.words_per_row(), 0);
            std::vector<uint32_t> chosen;
            if (pick_disjoint(scan.bad_masks, d.t, 0, used, chosen)) {
                DominationCounterexample ce;
                ce.R = R;
                for (uint32_t idx : chosen) ce.families.push_back(scan.bad_sets[idx]);
                return ce;
            }
        }

        // next r-combination
        int32_t pos = int32_t(d.r) - 1;
        while (pos >= 0 && rpick[pos] == n - d.r + pos) --pos;
        if (pos < 0) break;
        ++rpick[pos];
        for (uint32_t i = uint32_t(pos) + 1; i < d.r; ++i) rpick[i] = rpick[i - 1] + 1;
    }
    return std::nullopt;
}

std::optional<DominationCounterexample> refute_domination_randomized(
    const Graph& g, const DominationParams& d, uint32_t trials, uint64_t seed) {
    if (d.r < 1 || d.s < 1 || d.t < 1) throw InvalidArgument("domination parameters must be >= 1");
    uint64_t need = uint64_t(d.r) + uint64_t(d.s) * d.t;
    if (need > g.n()) throw InvalidArgument("r + s*t exceeds the vertex count");

    for (uint32_t trial = 0; trial < trials; ++trial) {
        Rng rng(Rng::derive_seed(seed, trial));
        std::vector<uint32_t> draw = rng.sample_distinct(g.n(), uint32_t(need));
        DominationCounterexample cand;
        cand.R.assign(draw.begin(), draw.begin() + d.r);
        std::sort(cand.R.begin(), cand.R.end());
        size_t at = d.r;
        for (uint32_t i = 0; i < d.t; ++i) {
            VertexSet f(draw.begin() + at, draw.begin() + at + d.s);
            std::sort(f.begin(), f.end());
            cand.families.push_back(std::move(f));
            at += d.s;
        }
        std::sort(cand.families.begin(), cand.families.end());
        if (!find_dominating_pair(g, cand.R, cand.families)) return cand;
    }
    return std::nullopt;
}

bool domination_threshold_ok(uint64_t n, double p, const DominationParams& d) {
    if (n < 2) throw InvalidArgument("domination threshold needs n >= 2");
    return domination_threshold_holds(n, p, d.r, d.s, d.t);
}

}  // namespace ug
