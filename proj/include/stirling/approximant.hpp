#pragma once

#include <utility>
#include <vector>

#include "stirling/field.hpp"
#include "stirling/precision.hpp"
#include "stirling/series.hpp"

namespace stirling {

// One evaluation of the truncated series against a reference Gamma value.
// scaled_error = |R(s) - sum_{k<=n} c_k s^-k| * s^n with
// R(s) = Gamma(s+1) / ((s/e)^s sqrt(2 pi s)); it isolates the bracketed
// series, keeping every compared quantity O(1).
struct ApproxRow {
    BigRat s;
    int order = 0;
    Real reference;
    Real approx;
    Real rel_error;
    Real scaled_error;
};

struct ApproximationReport {
    std::vector<ApproxRow> rows;  // sorted by (order, s)
};

// (s/e)^s as exp(s (ln s - 1)).
Real power_term(const BigRat& s, const PrecisionContext& ctx);

// Cross-check route for integer s <= 170: exact s^s divided by e^s.
Real power_term_exact_route(const BigRat& s, const PrecisionContext& ctx);

// Gamma(s+1) / ((s/e)^s sqrt(2 pi s)), the bracketed-series value.
Real ratio_R(const BigRat& s, const PrecisionContext& ctx);

// (s/e)^s sqrt(2 pi s) sum_{k<=n} c_k s^-k.
Real stirling_approx(const BigRat& s, int n, const StirlingSeries& series,
                     const PrecisionContext& ctx);

ApproximationReport error_table(const std::vector<BigRat>& s_list, const std::vector<int>& n_list,
                                const StirlingSeries& series, const PrecisionContext& ctx);

struct ScalingRow {
    BigRat s_small;
    BigRat s_big;
    Real ratio;     // remainder(s_small) / remainder(s_big)
    double expected;  // 2^(n+1)
    bool pass = false;
};

struct ScalingCheck {
    int order = 0;
    std::vector<ScalingRow> rows;
    bool pass = false;
};

// After n terms the remainder is dominated by c_{n+1} s^-(n+1), so doubling s
// should shrink it by about 2^(n+1). Band [0.8, 1.25] * 2^(n+1) absorbs the
// next term's contamination for s >= 20.
ScalingCheck scaling_check(int n, const std::vector<std::pair<BigRat, BigRat>>& pairs,
                           const StirlingSeries& series, const PrecisionContext& ctx);

}  // namespace stirling
