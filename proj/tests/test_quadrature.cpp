#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stirling/approximant.hpp"
#include "stirling/quadrature.hpp"

using namespace stirling;

namespace {

Real pow10_neg(int k, int bits) {
    Real out(1, bits);
    for (int i = 0; i < k; ++i) out = out / 10;
    return out;
}

Real rel_gap(const Real& a, const Real& b, int bits) {
    Real diff(0, bits);
    diff = a - b;
    diff = abs_real(diff);
    Real out(0, bits);
    out = diff / abs_real(b);
    return out;
}

}  // namespace

TEST_CASE("gauss-legendre rule basics") {
    const int bits = working_bits(40);
    const GaussLegendreRule& rule = gl_rule(32, bits);
    REQUIRE(rule.nodes.size() == 32);

    Real wsum(0, bits);
    for (std::size_t i = 0; i < 32; ++i) {
        if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
        wsum += rule.weights[i];
        // symmetry
        Real mirror(0, bits);
        mirror = rule.nodes[i] + rule.nodes[31 - i];
        CHECK(abs_real(mirror) <= pow10_neg(38, bits));
    }
    Real two_gap(0, bits);
    two_gap = wsum - 2;
    CHECK(abs_real(two_gap) <= pow10_neg(38, bits));

    // single panel integrates x^2 over [0, 1]
    auto f = [&](const Real& x) {
        Real out(0, bits);
        out = x * x;
        return out;
    };
    Real got = integrate_panels(f, make_real(bits), Real(1, bits), 1, bits);
    CHECK(rel_gap(got, to_real(make_rational(1, 3), bits), bits) <= pow10_neg(38, bits));
}

TEST_CASE("gamma at integers is the exact factorial") {
    PrecisionContext ctx(40);
    const int bits = working_bits(ctx);
    CHECK(gamma_reference(BigRat(1), ctx) == Real(1, bits));
    CHECK(gamma_reference(BigRat(2), ctx) == Real(1, bits));
    CHECK(gamma_reference(BigRat(11), ctx) == Real(3628800, bits));
    IntegralResult detail = gamma_reference_detailed(BigRat(11), ctx);
    CHECK(sign_of(detail.estimated_error) == 0);
    CHECK_THROWS_AS(gamma_reference(BigRat(0), ctx), std::domain_error);
    CHECK_THROWS_AS(gamma_reference(BigRat(-3), ctx), std::domain_error);
}

TEST_CASE("gamma at one half is sqrt(pi)") {
    PrecisionContext ctx(40);
    const int bits = working_bits(ctx);
    Real got = gamma_reference(make_rational(1, 2), ctx);
    CHECK(to_decimal_string(got, 35) == "1.7724538509055160272981674833411452");
    // and against the library's own square root of the Machin pi
    Real target = sqrt_pos(const_pi(bits), bits);
    CHECK(rel_gap(got, target, bits) <= pow10_neg(34, bits));
}

TEST_CASE("gamma recurrence on a non-integer argument") {
    PrecisionContext ctx(32);
    const int bits = working_bits(ctx);
    BigRat s = make_rational(7, 2);
    Real left = gamma_reference(s + 1, ctx);
    Real right(0, bits);
    right = to_real(s, bits) * gamma_reference(s, ctx);
    CHECK(rel_gap(left, right, bits) <= pow10_neg(28, bits));
}

TEST_CASE("laplace-form identity") {
    PrecisionContext ctx(40);
    const int bits = working_bits(ctx);
    Real tol = pow10_neg(10, bits);

    // s = 1: the integral rearranges to e
    IntegralResult r1 = laplace_integral(BigRat(1), ctx);
    CHECK(rel_gap(r1.value, const_e(bits), bits) <= pow10_neg(12, bits));
    CHECK(r1.estimated_error <= pow10_neg(20, bits));
    CHECK(r1.panels > 0);

    // s = 10 against the exact factorial
    IntegralResult r10 = laplace_integral(BigRat(10), ctx);
    Real s(10, bits);
    Real lhs(0, bits);
    lhs = pow_real(s, Real(11, bits), bits) * exp_real(-s, bits) * r10.value;
    CHECK(rel_gap(lhs, Real(3628800, bits), bits) <= tol);

    CHECK_THROWS_AS(laplace_integral(BigRat(0), ctx), std::domain_error);
}

TEST_CASE("substituted-form identity and route agreement") {
    PrecisionContext ctx(40);
    const int bits = working_bits(ctx);
    Real tol = pow10_neg(10, bits);

    IntegralResult r1 = substituted_integral(BigRat(1), ctx);
    CHECK(rel_gap(r1.value, const_e(bits), bits) <= pow10_neg(12, bits));

    IntegralResult r5s = substituted_integral(BigRat(5), ctx);
    IntegralResult r5l = laplace_integral(BigRat(5), ctx);
    Real gamma6(120, bits);
    Real five(5, bits);
    Real route_a(0, bits), route_b(0, bits);
    route_a = power_term(BigRat(5), ctx) * sqrt_pos(five, bits) * r5s.value;
    route_b = pow_real(five, Real(6, bits), bits) * exp_real(-five, bits) * r5l.value;
    CHECK(rel_gap(route_a, gamma6, bits) <= tol);
    CHECK(rel_gap(route_b, gamma6, bits) <= tol);
    CHECK(rel_gap(route_a, route_b, bits) <= tol);

    CHECK_THROWS_AS(substituted_integral(BigRat(-1), ctx), std::domain_error);
}

TEST_CASE("laplace integral drifts to sqrt(2 pi / s) for large s") {
    PrecisionContext ctx(32);
    const int bits = working_bits(ctx);
    IntegralResult r = laplace_integral(BigRat(10000), ctx);
    Real scaled(0, bits);
    scaled = r.value * Real(100, bits);  // sqrt(10000)
    Real gap(0, bits);
    gap = scaled - sqrt_two_pi(ctx);
    CHECK(abs_real(gap) <= Real(1e-3, bits));
}

TEST_CASE("limit of the substituted integral") {
    PrecisionContext ctx(32);
    const int bits = working_bits(ctx);
    std::vector<LimitPoint> pts = limit_check_e9({BigRat(1), BigRat(10), BigRat(100)}, ctx);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].deviation > pts[1].deviation);
    CHECK(pts[1].deviation > pts[2].deviation);

    // at s = 1 the integral is exactly e, so the deviation is e - sqrt(2 pi)
    Real expect(0, bits);
    expect = const_e(bits) - sqrt_two_pi(ctx);
    CHECK(rel_gap(pts[0].deviation, expect, bits) <= pow10_neg(10, bits));
    CHECK(to_decimal_string(pts[0].deviation, 5) == "0.21165");

    // deviation at s = 100 sits near sqrt(2 pi)/1200, well inside [1e-3, 3e-3]
    CHECK(pts[2].deviation > Real(1e-3, bits));
    CHECK(pts[2].deviation < Real(3e-3, bits));

    CHECK_THROWS_AS(limit_check_e9({BigRat(10), BigRat(1)}, ctx), std::invalid_argument);
}

TEST_CASE("sqrt(2 pi) reference value") {
    PrecisionContext ctx(40);
    CHECK(to_decimal_string(sqrt_two_pi(ctx), 35) == "2.5066282746310005024157652848110453");
}
