#include "core/precise.hpp"

#include <vector>

#include "core/errors.hpp"

namespace ug {

std::string Real::to_decimal(int digits, mpfr_rnd_t rnd) const {
    char fmt[32];
    char mode = rnd == MPFR_RNDD ? 'D' : rnd == MPFR_RNDU ? 'U' : 'N';
    snprintf(fmt, sizeof fmt, "%%.%dR%cg", digits, mode);
    char* s = nullptr;
    mpfr_asprintf(&s, fmt, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

Interval Interval::exact_u64(uint64_t x, mpfr_prec_t prec) {
    static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long expected");
    Interval r(prec);
    mpfr_set_ui(r.lo.get(), x, MPFR_RNDD);
    mpfr_set_ui(r.up.get(), x, MPFR_RNDU);
    return r;
}

Interval Interval::exact_double(double x, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_d(r.lo.get(), x, MPFR_RNDD);
    mpfr_set_d(r.up.get(), x, MPFR_RNDU);
    return r;
}

Interval Interval::add(const Interval& o) const {
    Interval r(prec());
    mpfr_add(r.lo.get(), lo.get(), o.lo.get(), MPFR_RNDD);
    mpfr_add(r.up.get(), up.get(), o.up.get(), MPFR_RNDU);
    return r;
}

Interval Interval::sub(const Interval& o) const {
    Interval r(prec());
    mpfr_sub(r.lo.get(), lo.get(), o.up.get(), MPFR_RNDD);
    mpfr_sub(r.up.get(), up.get(), o.lo.get(), MPFR_RNDU);
    return r;
}

Interval Interval::mul(const Interval& o) const {
    if (mpfr_sgn(lo.get()) < 0 || mpfr_sgn(o.lo.get()) < 0)
        throw InvalidArgument("interval mul requires nonnegative operands");
    Interval r(prec());
    mpfr_mul(r.lo.get(), lo.get(), o.lo.get(), MPFR_RNDD);
    mpfr_mul(r.up.get(), up.get(), o.up.get(), MPFR_RNDU);
    return r;
}

Interval Interval::div(const Interval& o) const {
    if (mpfr_sgn(lo.get()) < 0 || mpfr_sgn(o.lo.get()) <= 0)
        throw InvalidArgument("interval div requires nonnegative numerator, positive denominator");
    Interval r(prec());
    mpfr_div(r.lo.get(), lo.get(), o.up.get(), MPFR_RNDD);
    mpfr_div(r.up.get(), up.get(), o.lo.get(), MPFR_RNDU);
    return r;
}

Interval Interval::log() const {
    if (mpfr_sgn(lo.get()) <= 0) throw InvalidArgument("interval log requires positive argument");
    Interval r(prec());
    mpfr_log(r.lo.get(), lo.get(), MPFR_RNDD);
    mpfr_log(r.up.get(), up.get(), MPFR_RNDU);
    return r;
}

Interval Interval::pow(const Interval& e) const {
    // base > 0. x^y is monotone in each argument over a positive base range,
    // so the enclosure is the min/max over the four corners, each corner
    // evaluated with the matching directed rounding (mpfr_pow is correctly
    // rounded).
    if (mpfr_sgn(lo.get()) <= 0) throw InvalidArgument("interval pow requires positive base");
    Interval r(prec());
    mpfr_srcptr bases[2] = {lo.get(), up.get()};
    mpfr_srcptr exps[2] = {e.lo.get(), e.up.get()};
    Real corner(prec());
    bool first = true;
    for (mpfr_srcptr b : bases)
        for (mpfr_srcptr x : exps) {
            mpfr_pow(corner.get(), b, x, MPFR_RNDD);
            if (first || mpfr_cmp(corner.get(), r.lo.get()) < 0) mpfr_set(r.lo.get(), corner.get(), MPFR_RNDD);
            mpfr_pow(corner.get(), b, x, MPFR_RNDU);
            if (first || mpfr_cmp(corner.get(), r.up.get()) > 0) mpfr_set(r.up.get(), corner.get(), MPFR_RNDU);
            first = false;
        }
    return r;
}

Interval Interval::min(const Interval& o) const {
    Interval r(prec());
    mpfr_min(r.lo.get(), lo.get(), o.lo.get(), MPFR_RNDD);
    mpfr_min(r.up.get(), up.get(), o.up.get(), MPFR_RNDU);
    return r;
}

int Interval::sign_or_indeterminate() const {
    if (mpfr_sgn(lo.get()) > 0) return 1;
    if (mpfr_sgn(up.get()) < 0) return -1;
    if (mpfr_zero_p(lo.get()) && mpfr_zero_p(up.get())) return 0;
    return 2;
}

int cmp_int_vs_nlogn(uint64_t m, uint64_t n) {
    return resolve_sign_diff(
        [&](mpfr_prec_t p) { return Interval::exact_u64(m, p); },
        [&](mpfr_prec_t p) {
            Interval nn = Interval::exact_u64(n, p);
            return nn.mul(nn.log());
        });
}

int cmp_int_vs_pow(uint64_t m, uint64_t n, double eps) {
    return resolve_sign_diff(
        [&](mpfr_prec_t p) { return Interval::exact_u64(m, p); },
        [&](mpfr_prec_t p) {
            Interval base = Interval::exact_u64(n, p);
            Interval e = Interval::exact_double(1.5, p).sub(Interval::exact_double(eps, p));
            return base.pow(e);
        });
}

int cmp_scaled_vs_nlog(double c, uint64_t x, uint64_t n, uint64_t y) {
    return resolve_sign_diff(
        [&](mpfr_prec_t p) {
            return Interval::exact_double(c, p).mul(Interval::exact_u64(x, p));
        },
        [&](mpfr_prec_t p) {
            return Interval::exact_u64(n, p).mul(Interval::exact_u64(y, p).log());
        });
}

int cmp_int_vs_c_pow(uint64_t m, double c, uint64_t n, double eps) {
    return resolve_sign_diff(
        [&](mpfr_prec_t p) { return Interval::exact_u64(m, p); },
        [&](mpfr_prec_t p) {
            Interval base = Interval::exact_u64(n, p);
            Interval e = Interval::exact_double(1.5, p).sub(Interval::exact_double(eps, p));
            return Interval::exact_double(c, p).mul(base.pow(e));
        });
}

uint64_t floor_resolved(const std::function<Interval(mpfr_prec_t)>& eval) {
    for (mpfr_prec_t prec = 192; prec <= (1 << 16); prec *= 2) {
        Interval x = eval(prec);
        Real flo(prec), fup(prec);
        mpfr_floor(flo.get(), x.lo.get());
        mpfr_floor(fup.get(), x.up.get());
        if (mpfr_equal_p(flo.get(), fup.get()) || x.is_exact()) {
            if (mpfr_sgn(flo.get()) < 0) throw InvalidArgument("floor of a negative quantity");
            return mpfr_get_ui(flo.get(), MPFR_RNDD);
        }
    }
    Interval x = eval(1 << 16);
    Real flo(1 << 16);
    mpfr_floor(flo.get(), x.lo.get());
    return mpfr_get_ui(flo.get(), MPFR_RNDD);
}

bool domination_threshold_holds(uint64_t n, double p, uint64_t r, uint64_t s, uint64_t t) {
    if (n < 2 || p > 1.0 || r < 1 || s < 1 || t < 1)
        throw InvalidArgument("domination threshold: need n >= 2, p <= 1, r,s,t >= 1");
    if (p <= 0.0) return false;  // p^s = 0 < 3 log n
    // sign(p^s * min(r/s, t) - 3 log n); <= means sign >= 0
    int sign = resolve_sign_diff(
        [&](mpfr_prec_t prec) {
            Interval ps = Interval::exact_double(p, prec).pow(Interval::exact_u64(s, prec));
            Interval ratio = Interval::exact_u64(r, prec).div(Interval::exact_u64(s, prec));
            return ps.mul(ratio.min(Interval::exact_u64(t, prec)));
        },
        [&](mpfr_prec_t prec) {
            return Interval::exact_u64(3, prec).mul(Interval::exact_u64(n, prec).log());
        });
    return sign >= 0;
}

}  // namespace ug
