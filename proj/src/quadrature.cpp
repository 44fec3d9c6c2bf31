#include "stirling/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "stirling/analytic.hpp"

namespace stirling {

namespace {

GaussLegendreRule compute_gl_rule(int points, int bits) {
    const int wb = bits + 32;
    GaussLegendreRule rule;
    rule.nodes.reserve(static_cast<std::size_t>(points));
    rule.weights.reserve(static_cast<std::size_t>(points));

    Real tol(1, wb);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), static_cast<unsigned long>(bits) + 8);

    for (int i = 0; i < points; ++i) {
        Real x(std::cos(M_PI * (i + 0.75) / (points + 0.5)), wb);
        Real p0(0, wb), p1(0, wb), pk(0, wb), dp(0, wb), dx(0, wb);
        for (int iter = 0; iter < 100; ++iter) {
            p0 = Real(1, wb);
            p1 = x;
            for (int k = 2; k <= points; ++k) {
                pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            // p1 = P_n(x), p0 = P_{n-1}(x)
            dp = points * (x * p1 - p0) / (x * x - 1);
            dx = p1 / dp;
            x -= dx;
            if (abs_real(dx) < tol) break;
        }
        // one clean evaluation at the converged node
        p0 = Real(1, wb);
        p1 = x;
        for (int k = 2; k <= points; ++k) {
            pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = pk;
        }
        dp = points * (x * p1 - p0) / (x * x - 1);

        Real node(0, bits), weight(0, bits);
        node = -x;  // seeds run from +1 down; negation stores them ascending
        weight = 2 / ((1 - x * x) * dp * dp);
        rule.nodes.push_back(node);
        rule.weights.push_back(weight);
    }
    return rule;
}

std::mutex g_rule_mutex;
std::map<std::pair<int, int>, std::unique_ptr<const GaussLegendreRule>> g_rule_cache;

constexpr int kPanelPoints = 32;

double to_double(const BigRat& r) { return mpq_get_d(r.get_mpq_t()); }

// Exact alternating series for the [0,1] piece of the Gamma integrand:
// sum_k (-1)^k / (k! (s+k)).
BigRat gamma_series_01(const BigRat& s, int digits) {
    BigInt ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(digits + 10));
    const BigRat threshold(BigInt(1), ten_pow);

    BigRat sum(0);
    BigInt k_fact(1);
    for (int k = 0; k < 100000; ++k) {
        if (k > 0) k_fact *= k;
        BigRat term = BigRat(1) / (BigRat(k_fact) * (s + k));
        term.canonicalize();
        if (term < threshold) break;
        if (k % 2 == 0) sum += term; else sum -= term;
    }
    sum.canonicalize();
    return sum;
}

struct TwoPassResult {
    Real value;
    Real error;
};

TwoPassResult integrate_two_pass(const std::function<Real(const Real&)>& f, const Real& a,
                                 const Real& b, int panels, int bits) {
    Real coarse = integrate_panels(f, a, b, panels, bits);
    Real fine = integrate_panels(f, a, b, 2 * panels, bits);
    Real err(0, bits);
    err = coarse - fine;
    return TwoPassResult{fine, abs_real(err)};
}

}  // namespace

const GaussLegendreRule& gl_rule(int points, int bits) {
    std::lock_guard<std::mutex> lock(g_rule_mutex);
    auto key = std::make_pair(points, bits);
    auto it = g_rule_cache.find(key);
    if (it == g_rule_cache.end()) {
        it = g_rule_cache
                 .emplace(key, std::make_unique<const GaussLegendreRule>(compute_gl_rule(points, bits)))
                 .first;
    }
    return *it->second;
}

Real integrate_panels(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                      int panels, int bits) {
    const GaussLegendreRule& rule = gl_rule(kPanelPoints, bits);
    Real h(0, bits), half(0, bits), sum(0, bits), c(0, bits), t(0, bits), panel_sum(0, bits);
    h = (b - a) / panels;
    mpf_div_2exp(half.get_mpf_t(), h.get_mpf_t(), 1);
    for (int p = 0; p < panels; ++p) {
        c = a + p * h + half;
        panel_sum = Real(0, bits);
        for (int i = 0; i < kPanelPoints; ++i) {
            t = c + half * rule.nodes[static_cast<std::size_t>(i)];
            panel_sum += rule.weights[static_cast<std::size_t>(i)] * f(t);
        }
        sum += panel_sum * half;
    }
    return sum;
}

IntegralResult gamma_reference_detailed(const BigRat& s, const PrecisionContext& ctx) {
    if (s <= 0) throw std::domain_error("gamma_reference: s must be > 0");
    const int bits = working_bits(ctx);

    if (s.get_den() == 1) {
        if (s > 1000000) throw std::overflow_error("gamma_reference: integer s too large");
        BigInt fac;
        mpz_fac_ui(fac.get_mpz_t(), s.get_num().get_ui() - 1);
        IntegralResult result{make_real(bits), make_real(bits), 1, make_real(bits)};
        mpf_set_z(result.value.get_mpf_t(), fac.get_mpz_t());
        return result;
    }

    const double sd = to_double(s);
    const double tail_digits = std::max(60.0, ctx.digits + 10.0);
    const double t_max = sd * std::log(std::max(sd, 2.0)) + tail_digits * M_LN10;
    const double tau_max = std::log(t_max);
    const double width = std::min(0.5, 1.0 / std::sqrt(std::max(sd, 1.0)));
    const int panels = std::max(8, static_cast<int>(std::ceil(tau_max / width)));

    Real s_real = to_real(s, bits);
    auto integrand = [&](const Real& tau) {
        Real z(0, bits);
        z = s_real * tau - exp_real(tau, bits);
        return exp_real(z, bits);
    };
    Real a = make_real(bits);
    Real b(tau_max, bits);
    TwoPassResult tp = integrate_two_pass(integrand, a, b, panels, bits);

    IntegralResult result{make_real(bits), tp.error, 2 * panels, b};
    result.value = tp.value + to_real(gamma_series_01(s, ctx.digits), bits);
    return result;
}

Real gamma_reference(const BigRat& s, const PrecisionContext& ctx) {
    return gamma_reference_detailed(s, ctx).value;
}

IntegralResult laplace_integral(const BigRat& s, const PrecisionContext& ctx) {
    if (s <= 0) throw std::domain_error("laplace_integral: s must be > 0");
    const int bits = working_bits(ctx);
    const double sd = to_double(s);
    const double budget = (ctx.digits + 10.0) * M_LN10 + 5.0;

    Real s_real = to_real(s, bits);

    // (-1, 0] in w = -ln(1+x): integrand exp(s (1 - w - e^-w) - w) on [0, w_max]
    const double w_max = (budget + sd) / (sd + 1.0);
    const double width_neg = std::min(0.5, std::max(2.0 / (sd + 1.0), 0.5 / std::sqrt(sd)));
    const int panels_neg = std::max(4, static_cast<int>(std::ceil(w_max / width_neg)));
    auto neg_integrand = [&](const Real& w) {
        Real z(0, bits);
        z = s_real * (1 - w - exp_real(-w, bits)) - w;
        return exp_real(z, bits);
    };

    // [0, x_max] with s g(x_max) just past the budget
    Real v_cut(std::sqrt(budget / sd), bits);
    Real x_max(0, bits);
    x_max = f_of_v(v_cut, ctx) * Real(1.02, bits) + Real(0.1, bits);
    const double x_max_d = x_max.get_d();
    const double width_pos = std::min(0.25, 1.0 / (2.0 * std::sqrt(std::max(sd, 1.0))));
    const int panels_pos = std::max(4, static_cast<int>(std::ceil(x_max_d / width_pos)));
    auto pos_integrand = [&](const Real& x) {
        Real z(0, bits);
        z = -s_real * g_eval(x, ctx);
        return exp_real(z, bits);
    };

    Real zero = make_real(bits);
    Real w_hi(w_max, bits);
    TwoPassResult neg = integrate_two_pass(neg_integrand, zero, w_hi, panels_neg, bits);
    TwoPassResult pos = integrate_two_pass(pos_integrand, zero, x_max, panels_pos, bits);

    IntegralResult result{make_real(bits), make_real(bits), 2 * (panels_neg + panels_pos), x_max};
    result.value = neg.value + pos.value;
    result.estimated_error = neg.error + pos.error;
    return result;
}

IntegralResult substituted_integral(const BigRat& s, const PrecisionContext& ctx) {
    if (s <= 0) throw std::domain_error("substituted_integral: s must be > 0");
    const int bits = working_bits(ctx);
    const double budget = (ctx.digits + 10.0) * M_LN10 + 10.0;

    Real sqrt_s = sqrt_pos(to_real(s, bits), bits);
    auto integrand = [&](const Real& u) {
        Real v(0, bits), z(0, bits), out(0, bits);
        v = u / sqrt_s;
        z = -u * u;
        out = 2 * (y_of_v(v, ctx) + y_of_v(-v, ctx)) * exp_real(z, bits);
        return out;
    };

    const double u_max = std::sqrt(budget);
    const int panels = std::max(6, static_cast<int>(std::ceil(u_max / 0.4)));
    Real zero = make_real(bits);
    Real u_hi(u_max, bits);
    TwoPassResult tp = integrate_two_pass(integrand, zero, u_hi, panels, bits);
    return IntegralResult{tp.value, tp.error, 2 * panels, u_hi};
}

std::vector<LimitPoint> limit_check_e9(const std::vector<BigRat>& s_list,
                                       const PrecisionContext& ctx) {
    for (std::size_t i = 0; i + 1 < s_list.size(); ++i)
        if (!(s_list[i] < s_list[i + 1]))
            throw std::invalid_argument("limit_check_e9: s_list must be ascending");
    const int bits = working_bits(ctx);
    const Real target = sqrt_two_pi(ctx);
    std::vector<LimitPoint> points;
    points.reserve(s_list.size());
    for (const BigRat& s : s_list) {
        IntegralResult r = substituted_integral(s, ctx);
        Real dev(0, bits);
        dev = r.value - target;
        points.push_back(LimitPoint{s, r.value, abs_real(dev)});
    }
    return points;
}

Real sqrt_two_pi(const PrecisionContext& ctx) {
    const int bits = working_bits(ctx);
    Real two_pi(0, bits);
    mpf_mul_2exp(two_pi.get_mpf_t(), const_pi(bits).get_mpf_t(), 1);
    return sqrt_pos(two_pi, bits);
}

}  // namespace stirling
