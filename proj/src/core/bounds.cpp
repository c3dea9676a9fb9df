#include "core/bounds.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace ug {

namespace {

constexpr mpfr_prec_t kEvalPrec = 256;

Interval iv(uint64_t x) { return Interval::exact_u64(x, kEvalPrec); }
Interval iv(double x) { return Interval::exact_double(x, kEvalPrec); }

Real interval_lo(const Interval& x) { return x.lo; }
Real interval_up(const Interval& x) { return x.up; }

Real real_zero() {
    Real r(kEvalPrec);
    mpfr_set_ui(r.get(), 0, MPFR_RNDN);
    return r;
}

Real real_u64(uint64_t x) {
    Real r(kEvalPrec);
    mpfr_set_ui(r.get(), x, MPFR_RNDN);
    return r;
}

void max_into(std::optional<Real>& best, const Real& cand) {
    if (!best || best->cmp(cand) < 0) best = cand;
}

void min_into(std::optional<Real>& best, const Real& cand) {
    if (!best || best->cmp(cand) > 0) best = cand;
}

}  // namespace

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::SmallM: return "SmallM";
        case Regime::SecondRegime: return "SecondRegime";
        case Regime::FirstRegime: return "FirstRegime";
        case Regime::AboveWindow: return "AboveWindow";
    }
    return "?";
}

uint64_t pairs_of(uint64_t n) { return n * (n - 1) / 2; }

Regime classify_regime(uint32_t n, uint64_t m, double epsilon) {
    if (n < 2) throw InvalidArgument("classify_regime needs n >= 2");
    if (epsilon <= 0) throw InvalidArgument("epsilon must be positive");
    if (2 * m < n) return Regime::SmallM;
    if (cmp_int_vs_nlogn(m, n) <= 0) return Regime::SecondRegime;
    if (cmp_int_vs_pow(m, n, epsilon) < 0) return Regime::FirstRegime;
    return Regime::AboveWindow;
}

LowerBoundBreakdown lower_bound_g_detailed(uint32_t n, uint64_t m) {
    if (n < 2) throw InvalidArgument("lower_bound_g needs n >= 2");
    uint64_t pairs = pairs_of(n);
    if (m > pairs) throw InvalidArgument("m exceeds C(n,2)");

    LowerBoundBreakdown out{real_zero(), {}, {}, {}, {}};
    if (m == 0) {
        out.notes.push_back("m=0: empty graph is universal, bound 0");
        return out;
    }

    std::optional<Real> best;
    max_into(best, real_u64(1));
    out.notes.push_back("trivial: 1");

    // (c) C(n,2) * n^(-n/m), exponent rounded down in magnitude for a lower bound
    {
        Interval exponent = iv(uint64_t(0)).sub(iv(uint64_t(n)).div(iv(m)));
        Interval val = iv(pairs).mul(iv(uint64_t(n)).pow(exponent));
        out.inequality2 = interval_lo(val);
        max_into(best, *out.inequality2);
        out.notes.push_back("inequality(2): C(n,2) n^(-n/m) = " + out.inequality2->to_decimal(8, MPFR_RNDD));
    }

    int vs_nlogn = cmp_int_vs_nlogn(m, n);
    if (vs_nlogn > 0) {
        // (a) C(n,2)(1 - n log n / m)
        Interval one = iv(uint64_t(1));
        Interval frac = iv(uint64_t(n)).mul(iv(uint64_t(n)).log()).div(iv(m));
        Interval val = iv(pairs).mul(one.sub(frac));
        out.counting_complement = interval_lo(val);
        max_into(best, *out.counting_complement);
        out.notes.push_back("counting(a): C(n,2)(1 - n log n/m) = " +
                            out.counting_complement->to_decimal(8, MPFR_RNDD));
    } else if (m >= 3) {
        // (b) (1/4) C(k,2) with k = m/log m, only when k >= 2
        Interval k = iv(m).div(iv(m).log());
        if (mpfr_cmp_ui(k.lo.get(), 2) >= 0) {
            Interval val = k.mul(k.sub(iv(uint64_t(1)))).div(iv(uint64_t(8)));
            out.counting_small = interval_lo(val);
            max_into(best, *out.counting_small);
            out.notes.push_back("counting(b): C(m/log m, 2)/4 = " +
                                out.counting_small->to_decimal(8, MPFR_RNDD));
        }
    }

    out.result = *best;
    return out;
}

Real lower_bound_g(uint32_t n, uint64_t m) { return lower_bound_g_detailed(n, m).result; }

namespace {

// Upper-bound candidates at one instance (no small-m recursion here).
void upper_candidates(uint32_t n, uint64_t m, double epsilon, std::optional<Real>& best,
                      std::vector<std::string>& notes) {
    uint64_t pairs = pairs_of(n);
    min_into(best, real_u64(pairs));

    // induction bound (3): 2^22 m^2/log^2 m (1 - 2m/(n log n)), window 16m/log m <= n <= 2m
    if (m >= 2 && 2 * m >= n && cmp_scaled_vs_nlog(16.0, m, n, m) <= 0) {
        Interval logm = iv(m).log();
        Interval lead = iv(uint64_t(1) << 22).mul(iv(m)).mul(iv(m)).div(logm.mul(logm));
        Interval frac = iv(uint64_t(2)).mul(iv(m)).div(iv(uint64_t(n)).mul(iv(uint64_t(n)).log()));
        if (mpfr_cmp_ui(frac.up.get(), 1) <= 0) {
            Interval val = lead.mul(iv(uint64_t(1)).sub(frac));
            min_into(best, interval_up(val));
            notes.push_back("induction(3): 2^22 m^2/log^2 m (1-2m/(n log n)) = " +
                            val.up.to_decimal(8, MPFR_RNDU));
        }
    }

    // first regime and its doubling-telescoped variants:
    // C(n,2) - 2^i * eps n_i^3 log n_i / (2^12 m), n_i = n / 2^i
    for (uint32_t i = 0; i <= 60; ++i) {
        if ((uint64_t(1) << i) >= n) break;
        bool in_window;
        Interval missing(kEvalPrec);
        if (i == 0) {
            in_window = cmp_int_vs_nlogn(m, n) > 0 && cmp_int_vs_pow(m, n, epsilon) < 0;
            if (in_window) {
                Interval nn = iv(uint64_t(n));
                missing = iv(epsilon).mul(nn).mul(nn).mul(nn).mul(nn.log()).div(
                    iv(uint64_t(1) << 12).mul(iv(m)));
            }
        } else {
            // n_i = n/2^i evaluated exactly; window: n_i log n_i < m < n_i^(3/2-eps)
            // and m <= C(n_i,2) so H(n_i, m) is nonempty
            Interval ni = iv(uint64_t(n)).div(iv(uint64_t(1) << i));
            if (mpfr_cmp_ui(ni.lo.get(), 4) < 0) break;
            Interval nlogn = ni.mul(ni.log());
            Interval power = ni.pow(iv(1.5).sub(iv(epsilon)));
            Interval ni_pairs = ni.mul(ni.sub(iv(uint64_t(1)))).div(iv(uint64_t(2)));
            Interval mm = iv(m);
            in_window = mpfr_cmp(mm.lo.get(), nlogn.up.get()) > 0 &&
                        mpfr_cmp(mm.up.get(), power.lo.get()) < 0 &&
                        mpfr_cmp(mm.up.get(), ni_pairs.lo.get()) <= 0;
            if (in_window) {
                missing = iv(uint64_t(1) << i)
                              .mul(iv(epsilon))
                              .mul(ni)
                              .mul(ni)
                              .mul(ni)
                              .mul(ni.log())
                              .div(iv(uint64_t(1) << 12).mul(mm));
            }
        }
        if (!in_window) continue;
        Real val = Interval::exact_u64(pairs, kEvalPrec).sub(missing).up;
        if (mpfr_sgn(val.get()) < 0) continue;
        min_into(best, val);
        notes.push_back((i == 0 ? std::string("first-regime: ")
                                : "doubling(i=" + std::to_string(i) + "): ") +
                        "C(n,2) - missing = " + val.to_decimal(8, MPFR_RNDU));
    }
}

}  // namespace

UpperBoundBreakdown upper_bound_g_detailed(uint32_t n, uint64_t m, double epsilon) {
    if (n < 2) throw InvalidArgument("upper_bound_g needs n >= 2");
    if (epsilon <= 0) throw InvalidArgument("epsilon must be positive");
    uint64_t pairs = pairs_of(n);
    if (m > pairs) throw InvalidArgument("m exceeds C(n,2)");

    UpperBoundBreakdown out{real_zero(), {}};
    if (m == 0) {
        out.notes.push_back("m=0: empty graph, bound 0");
        return out;
    }
    std::optional<Real> best;
    if (2 * m < n) {
        // every m-edge graph fits in 2m non-isolated vertices
        upper_candidates(uint32_t(2 * m), m, epsilon, best, out.notes);
        out.notes.push_back("small-m reduction: evaluated at (2m, m)");
    } else {
        upper_candidates(n, m, epsilon, best, out.notes);
    }
    out.result = *best;
    return out;
}

Real upper_bound_g(uint32_t n, uint64_t m, double epsilon) {
    return upper_bound_g_detailed(n, m, epsilon).result;
}

SideValue duality_convert(uint32_t n, SideValue v) {
    uint64_t pairs = pairs_of(n);
    if (v.value > pairs) throw InvalidArgument("value exceeds C(n,2)");
    return SideValue{pairs - v.value,
                     v.side == Side::Universality ? Side::Unavoidability : Side::Universality};
}

TransitionBounds transition_bounds(uint32_t n, double mu) {
    if (n < 3) throw InvalidArgument("transition_bounds needs n >= 3");
    if (mu <= 0) throw InvalidArgument("mu must be positive");
    TransitionBounds out;
    out.m = floor_resolved([&](mpfr_prec_t prec) {
        return Interval::exact_double(mu, prec)
            .mul(Interval::exact_u64(n, prec))
            .mul(Interval::exact_u64(n, prec).log());
    });
    uint64_t pairs = pairs_of(n);
    out.m = std::min(out.m, pairs);

    out.lower = lower_bound_g(n, out.m);
    std::optional<Real> best_upper;
    for (double eps : {0.4, 0.25, 0.1, 0.05, 0.01}) {
        Real u = upper_bound_g(n, out.m, eps);
        if (!best_upper || u.cmp(*best_upper) < 0) {
            best_upper = u;
            out.eps_used = eps;
        }
    }
    out.upper = *best_upper;

    Interval pr = Interval::exact_u64(pairs, kEvalPrec);
    Interval lf(kEvalPrec), uf(kEvalPrec);
    mpfr_div(lf.lo.get(), out.lower.get(), pr.up.get(), MPFR_RNDD);
    mpfr_div(uf.up.get(), out.upper.get(), pr.lo.get(), MPFR_RNDU);
    out.lower_frac = lf.lo;
    out.upper_frac = uf.up;
    out.nontrivial = out.lower.sign() > 0 && mpfr_cmp_ui(out.upper_frac.get(), 1) < 0;
    return out;
}

std::string BoundReport::csv_header() {
    return "n,m,regime,lower,upper,lower_frac,upper_frac";
}

std::string BoundReport::csv_row() const {
    return std::to_string(n) + "," + std::to_string(m) + "," + regime_name(regime) + "," + lower +
           "," + upper + "," + lower_frac + "," + upper_frac;
}

BoundReport bound_report(uint32_t n, uint64_t m, double epsilon) {
    BoundReport r;
    r.n = n;
    r.m = m;
    r.regime = classify_regime(n, m, epsilon);
    LowerBoundBreakdown lo = lower_bound_g_detailed(n, m);
    UpperBoundBreakdown up = upper_bound_g_detailed(n, m, epsilon);
    r.lower = lo.result.to_decimal(20, MPFR_RNDD);
    r.upper = up.result.to_decimal(20, MPFR_RNDU);
    uint64_t pairs = pairs_of(n);
    Interval pr = Interval::exact_u64(pairs, kEvalPrec);
    Real lf(kEvalPrec), uf(kEvalPrec);
    mpfr_div(lf.get(), lo.result.get(), pr.up.get(), MPFR_RNDD);
    mpfr_div(uf.get(), up.result.get(), pr.lo.get(), MPFR_RNDU);
    r.lower_frac = lf.to_decimal(12, MPFR_RNDD);
    r.upper_frac = uf.to_decimal(12, MPFR_RNDU);
    r.notes = lo.notes;
    r.notes.insert(r.notes.end(), up.notes.begin(), up.notes.end());
    return r;
}

}  // namespace ug
