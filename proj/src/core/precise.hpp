#pragma once

#include <mpfr.h>

#include <cstdint>
#include <functional>
#include <string>

namespace ug {

// RAII wrapper over one mpfr value. Every stored value is an exact binary
// rational; certified bounds come from choosing the rounding direction of
// each operation, not from the representation.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 256) { mpfr_init2(v_, prec); }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(Real o) {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
    int sign() const { return mpfr_sgn(v_); }

    // Decimal rendering biased in the value's conservative direction.
    std::string to_decimal(int digits = 20, mpfr_rnd_t rnd = MPFR_RNDN) const;

private:
    mpfr_t v_;
};

// Certified enclosure [lo, up] of a real quantity. Operations widen the
// enclosure by rounding lo down and up up; mixed-sign multiplication is not
// needed here, so factors are required to be nonnegative.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec = 256) : lo(prec), up(prec) {}

    static Interval exact_u64(uint64_t x, mpfr_prec_t prec);
    static Interval exact_double(double x, mpfr_prec_t prec);

    Interval add(const Interval& o) const;
    Interval sub(const Interval& o) const;
    Interval mul(const Interval& o) const;  // both operands nonnegative
    Interval div(const Interval& o) const;  // both positive
    Interval log() const;                   // lo > 0
    Interval pow(const Interval& exponent) const;
    Interval min(const Interval& o) const;

    // +1 / -1 when the enclosure excludes zero, 0 when it is exactly zero,
    // 2 when indeterminate at this precision.
    int sign_or_indeterminate() const;

    bool is_exact() const { return mpfr_equal_p(lo.get(), up.get()); }
    mpfr_prec_t prec() const { return mpfr_get_prec(lo.get()); }

    Real lo, up;
};

// sign(a - b) for quantities given as interval-producing evaluators,
// escalating precision until the enclosures separate. Terminates for all
// comparisons in this artifact: equality can only occur between values both
// representable exactly, which the exactness check resolves.
template <class FA, class FB>
int resolve_sign_diff(FA eval_a, FB eval_b) {
    for (mpfr_prec_t prec = 192; prec <= (1 << 16); prec *= 2) {
        Interval a = eval_a(prec);
        Interval b = eval_b(prec);
        if (mpfr_cmp(a.lo.get(), b.up.get()) > 0) return 1;
        if (mpfr_cmp(a.up.get(), b.lo.get()) < 0) return -1;
        if (a.is_exact() && b.is_exact()) return mpfr_cmp(a.lo.get(), b.lo.get());
    }
    // unreachable for the formulas we evaluate; fall back to midpoints
    Interval a = eval_a(1 << 16), b = eval_b(1 << 16);
    return mpfr_cmp(a.lo.get(), b.lo.get());
}

// sign(m - n*log n); exact zero only at n = 1.
int cmp_int_vs_nlogn(uint64_t m, uint64_t n);

// sign(m - n^(3/2 - eps)); the exponent is formed exactly from the double.
int cmp_int_vs_pow(uint64_t m, uint64_t n, double eps);

// sign(c*x - n*log y), c an exact double factor. Covers the scaled window
// checks c*m <=> n log n and n log m <=> c*m.
int cmp_scaled_vs_nlog(double c, uint64_t x, uint64_t n, uint64_t y);

// sign(m - c * n^(3/2 - eps))
int cmp_int_vs_c_pow(uint64_t m, double c, uint64_t n, double eps);

// floor of the quantity enclosed by eval, escalating precision until the
// floor is unambiguous (the quantity must not be an exact integer unless the
// enclosure collapses onto it).
uint64_t floor_resolved(const std::function<Interval(mpfr_prec_t)>& eval);

// 3 log n <= p^s * min(r/s, t), evaluated with certified enclosures.
bool domination_threshold_holds(uint64_t n, double p, uint64_t r, uint64_t s, uint64_t t);

}  // namespace ug
