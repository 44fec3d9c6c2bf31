#pragma once

#include <utility>
#include <vector>

#include "stirling/field.hpp"
#include "stirling/precision.hpp"
#include "stirling/series.hpp"

namespace stirling {

// Limit-formula estimate of a single MacLaurin coefficient. `samples` holds
// (x_m, estimate_m) with x_m = 4^-m decreasing; `stabilized_digits` counts the
// leading decimal digits on which the final two estimates agree.
struct Method1Estimate {
    int n = 0;
    Real value;
    int stabilized_digits = 0;
    std::vector<std::pair<Real, Real>> samples;
};

class insufficient_precision : public std::runtime_error {
public:
    insufficient_precision(Method1Estimate estimate, const std::string& what)
        : std::runtime_error(what), estimate_(std::move(estimate)) {}
    const Method1Estimate& estimate() const { return estimate_; }

private:
    Method1Estimate estimate_;
};

// a_n = lim_{x->0+} 2^(n/2) ( sqrt(x - ln(1+x))/x
//                             - sum_{k<n} a_k (x - ln(1+x))^(k/2) ) / x^n,
// sampled at x_m = 4^-m. Convergence certifies the prefix a_0..a_{n-1}: any
// error in it makes the estimates diverge instead of stabilizing.
// Requires ctx.digits >= 10 (n+2); the subtraction burns roughly
// n log10(1/x_m) digits per sample.
Method1Estimate method1_estimate(int n, const CoeffTable& known, const PrecisionContext& ctx);

// Same, but refuses to return an unstabilized value: throws
// insufficient_precision when fewer than 4 digits stabilize.
Method1Estimate method1_coefficient(int n, const CoeffTable& known, const PrecisionContext& ctx);

// Exact B_0..B_{m_max}, convention B_1 = -1/2, from
// sum_{j=0}^{m} binom(m+1, j) B_j = 0.
std::vector<BigRat> bernoulli_numbers(int m_max);

// Independent route to the Stirling coefficients: exponentiate the classical
// ln-Gamma correction series mu(s) = sum_j B_{2j} / ((2j)(2j-1) s^(2j-1)) as a
// formal power series in 1/s, all in exact rational arithmetic. Shares no
// mathematics with the cubing recurrence.
StirlingSeries stirling_from_bernoulli(int n_max);

}  // namespace stirling
