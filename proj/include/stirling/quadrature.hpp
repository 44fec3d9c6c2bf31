#pragma once

#include <functional>
#include <vector>

#include "stirling/field.hpp"
#include "stirling/precision.hpp"

namespace stirling {

struct IntegralResult {
    Real value;
    Real estimated_error;  // |P-panel value - 2P-panel value|
    int panels = 0;        // panels in the refined pass
    Real truncation_point;
};

struct GaussLegendreRule {
    std::vector<Real> nodes;    // on [-1, 1], ascending
    std::vector<Real> weights;
};

// Nodes by Newton on the Legendre polynomial, cached per (points, bits).
const GaussLegendreRule& gl_rule(int points, int bits);

// Composite 32-point Gauss-Legendre over [a, b]; fixed summation order.
Real integrate_panels(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                      int panels, int bits);

// Gamma(s) for s > 0. Integer s: exact factorial. Otherwise the defining
// integral: an exact alternating series over [0, 1] plus Gauss-Legendre
// panels of e^(s tau - e^tau) over [0, ln T], with the tail beyond T below
// 10^-digits relative to the result.
Real gamma_reference(const BigRat& s, const PrecisionContext& ctx);
IntegralResult gamma_reference_detailed(const BigRat& s, const PrecisionContext& ctx);

// integral over (-1, inf) of e^(-s g(x)) dx. The (-1, 0] part is taken in
// w = -ln(1+x) to unfold the boundary; the positive part is truncated where
// s g(x) exceeds the precision budget, located via f_of_v.
IntegralResult laplace_integral(const BigRat& s, const PrecisionContext& ctx);

// integral over [0, inf) of 2 (y(u/sqrt s) + y(-u/sqrt s)) e^(-u^2) du.
IntegralResult substituted_integral(const BigRat& s, const PrecisionContext& ctx);

struct LimitPoint {
    BigRat s;
    Real value;      // substituted integral at s
    Real deviation;  // |value - sqrt(2 pi)|
};

// The integral tends to sqrt(2 pi) as s grows; reports per-s deviations.
// s_list must be ascending and positive.
std::vector<LimitPoint> limit_check_e9(const std::vector<BigRat>& s_list,
                                       const PrecisionContext& ctx);

// sqrt(2 pi) from the integer square root of the scaled Machin-series pi.
Real sqrt_two_pi(const PrecisionContext& ctx);

}  // namespace stirling
