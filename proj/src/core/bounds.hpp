#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/precise.hpp"

namespace ug {

enum class Regime { SmallM, SecondRegime, FirstRegime, AboveWindow };
const char* regime_name(Regime r);

// m < n/2 -> SmallM; m <= n log n -> SecondRegime (closed upper end);
// m < n^(3/2-eps) -> FirstRegime; else AboveWindow. Natural log, decided with
// certified enclosures.
Regime classify_regime(uint32_t n, uint64_t m, double epsilon);

uint64_t pairs_of(uint64_t n);  // C(n,2)

// Certified lower bound on g(n,m): the best of
//   (a) C(n,2) (1 - n log n / m)          when m > n log n
//   (b) (1/4) C(m/log m, 2)               when 3 <= m <= n log n and m/log m >= 2
//   (c) C(n,2) n^(-n/m)                   always (the raw counting inequality)
//   (d) 1                                 for m >= 1
// every step rounded toward the conservative (lower) side. m = 0 gives 0.
struct LowerBoundBreakdown {
    Real result;
    std::optional<Real> counting_complement;  // branch (a)
    std::optional<Real> counting_small;       // branch (b)
    std::optional<Real> inequality2;          // branch (c)
    std::vector<std::string> notes;
};
LowerBoundBreakdown lower_bound_g_detailed(uint32_t n, uint64_t m);
Real lower_bound_g(uint32_t n, uint64_t m);

// Certified upper bound on g(n,m): the least of
//   - C(n,2)
//   - the bound at (2m, m) when m < n/2 (targets have <= 2m non-isolated vertices)
//   - 2^22 m^2/log^2 m (1 - 2m/(n log n))   when 16m/log m <= n <= 2m
//   - C(n,2) - eps n^3 log n / (2^12 m)     when n log n < m < n^(3/2-eps)
//   - C(n,2) - 2^i eps n_i^3 log n_i/(2^12 m) for n_i = n/2^i landing in the
//     first-regime window with m <= C(n_i,2) (the doubling inequality,
//     telescoped) for i = 1..60
// every step rounded toward the conservative (upper) side.
struct UpperBoundBreakdown {
    Real result;
    std::vector<std::string> notes;
};
UpperBoundBreakdown upper_bound_g_detailed(uint32_t n, uint64_t m, double epsilon);
Real upper_bound_g(uint32_t n, uint64_t m, double epsilon);

enum class Side { Universality, Unavoidability };

struct SideValue {
    uint64_t value = 0;
    Side side = Side::Universality;
};

// Eq.-(1) complementation: value -> C(n,2) - value with the side flipped.
// An involution; value must lie in [0, C(n,2)].
SideValue duality_convert(uint32_t n, SideValue v);

struct TransitionBounds {
    uint64_t m = 0;             // floor(mu * n log n)
    Real lower;                 // lower_bound_g(n, m)
    Real upper;                 // min over an eps grid of upper_bound_g
    Real lower_frac;            // lower / C(n,2)
    Real upper_frac;            // upper / C(n,2)
    double eps_used = 0;
    bool nontrivial = false;    // both fractions strictly inside (0,1)
};
TransitionBounds transition_bounds(uint32_t n, double mu);

struct BoundReport {
    uint32_t n = 0;
    uint64_t m = 0;
    Regime regime = Regime::SmallM;
    std::string lower, upper;            // decimal, rounded outward
    std::string lower_frac, upper_frac;  // normalized by C(n,2)
    std::vector<std::string> notes;
    std::string csv_row() const;
    static std::string csv_header();
};
BoundReport bound_report(uint32_t n, uint64_t m, double epsilon);

}  // namespace ug
