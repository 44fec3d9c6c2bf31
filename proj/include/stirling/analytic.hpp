#pragma once

#include <vector>

#include "stirling/field.hpp"
#include "stirling/precision.hpp"

namespace stirling {

// g(x) = x - ln(1+x) on (-1, +inf): strictly convex, minimum 0 at x = 0.
// Near 0 the cancellation in the direct form is avoided with the series
// x^2/2 - x^3/3 + x^4/4 - ...
Real g_eval(const Real& x, const PrecisionContext& ctx);

// G(x) = g(x)/x^2 for x != 0, G(0) = 1/2. Positive and smooth on (-1, +inf).
Real G_eval(const Real& x, const PrecisionContext& ctx);

// v(x) = sqrt(g(x)) sgn x.
Real v_of_x(const Real& x, const PrecisionContext& ctx);

// x = f(v), the inverse of v(x): strictly increasing, f(0) = 0, range (-1, +inf).
// Safeguarded Newton on the monotone branch selected by the sign of v; the
// negative branch is solved in w = ln(1+x) to keep x = -1 + e^w resolvable.
Real f_of_v(const Real& v, const PrecisionContext& ctx);

// y(v) = v/f(v) with y(0) = sqrt(2)/2; for |v| < 1e-3 evaluated by the
// MacLaurin truncation at order 8 to dodge the 0/0 cancellation.
Real y_of_v(const Real& v, const PrecisionContext& ctx);

// | y(v) - sqrt(G(v / y(v))) |, consistency of the two evaluation routes.
Real fixed_point_residual(const Real& v, const PrecisionContext& ctx);

// 1 / (2 (1 + f(v)) y(v)^2), strictly positive since f(v) > -1.
Real implicit_derivative(const Real& v, const PrecisionContext& ctx);

struct GridSpec {
    BigRat lo;
    BigRat hi;
    BigRat step;
};

struct BoundWitness {
    Real C;                  // max over the grid of y(v) / (|v|+1)
    std::vector<Real> grid;  // sampled v values
    Real max_ratio;          // equals C
    std::size_t argmax;      // index into grid
};

// Empirical witness for the linear bound 0 < y(v) <= C (|v|+1).
BoundWitness bound_constant_search(const GridSpec& spec, const PrecisionContext& ctx);

// Grid-sampled modulus of continuity: max over |v| <= r of |y(v) - y(0)|,
// with grid_density+1 equally spaced samples of [-r, r].
Real modulus_omega(const Real& r, int grid_density, const PrecisionContext& ctx);

}  // namespace stirling
