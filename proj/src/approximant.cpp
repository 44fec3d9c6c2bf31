#include "stirling/approximant.hpp"

#include <algorithm>
#include <cmath>

#include "stirling/quadrature.hpp"

namespace stirling {

namespace {

// Exact sum_{k<=n} c_k s^-k.
BigRat partial_sum_exact(const BigRat& s, int n, const StirlingSeries& series) {
    BigRat s_pow(1);
    BigRat sum(0);
    for (int k = 0; k <= n; ++k) {
        sum += series.c(k) / s_pow;
        s_pow *= s;
    }
    sum.canonicalize();
    return sum;
}

Real sqrt_2_pi_s(const BigRat& s, const PrecisionContext& ctx) {
    const int bits = working_bits(ctx);
    Real arg(0, bits);
    mpf_mul_2exp(arg.get_mpf_t(), const_pi(bits).get_mpf_t(), 1);
    arg = arg * to_real(s, bits);
    return sqrt_pos(arg, bits);
}

}  // namespace

Real power_term(const BigRat& s, const PrecisionContext& ctx) {
    if (s <= 0) throw std::domain_error("power_term: s must be > 0");
    const int bits = working_bits(ctx);
    Real s_real = to_real(s, bits);
    Real z(0, bits);
    z = s_real * (ln_real(s_real, bits) - 1);
    return exp_real(z, bits);
}

Real power_term_exact_route(const BigRat& s, const PrecisionContext& ctx) {
    if (s.get_den() != 1 || s <= 0 || s > 170)
        throw std::invalid_argument("power_term_exact_route: needs integer s in [1, 170]");
    const int bits = working_bits(ctx);
    const unsigned long n = s.get_num().get_ui();
    BigInt s_pow;
    mpz_ui_pow_ui(s_pow.get_mpz_t(), n, n);
    Real num(0, bits);
    mpf_set_z(num.get_mpf_t(), s_pow.get_mpz_t());
    Real es = exp_real(to_real(s, bits), bits);
    Real out(0, bits);
    out = num / es;
    return out;
}

Real ratio_R(const BigRat& s, const PrecisionContext& ctx) {
    const int bits = working_bits(ctx);
    Real gamma = gamma_reference(s + 1, ctx);
    Real out(0, bits);
    out = gamma / (power_term(s, ctx) * sqrt_2_pi_s(s, ctx));
    return out;
}

Real stirling_approx(const BigRat& s, int n, const StirlingSeries& series,
                     const PrecisionContext& ctx) {
    if (s <= 0) throw std::domain_error("stirling_approx: s must be > 0");
    if (n < 0 || n > series.max_index())
        throw std::invalid_argument("stirling_approx: order outside series");
    const int bits = working_bits(ctx);
    Real partial = to_real(partial_sum_exact(s, n, series), bits);
    Real out(0, bits);
    out = power_term(s, ctx) * sqrt_2_pi_s(s, ctx) * partial;
    return out;
}

ApproximationReport error_table(const std::vector<BigRat>& s_list, const std::vector<int>& n_list,
                                const StirlingSeries& series, const PrecisionContext& ctx) {
    const int bits = working_bits(ctx);
    std::vector<int> orders = n_list;
    std::sort(orders.begin(), orders.end());
    std::vector<BigRat> svals = s_list;
    std::sort(svals.begin(), svals.end());

    ApproximationReport report;
    report.rows.reserve(orders.size() * svals.size());
    for (int n : orders) {
        for (const BigRat& s : svals) {
            ApproxRow row;
            row.s = s;
            row.order = n;
            row.reference = gamma_reference(s + 1, ctx);
            row.approx = stirling_approx(s, n, series, ctx);

            Real diff(0, bits);
            diff = row.approx - row.reference;
            row.rel_error = abs_real(diff);
            row.rel_error = row.rel_error / row.reference;

            Real partial = to_real(partial_sum_exact(s, n, series), bits);
            Real remainder(0, bits);
            remainder = ratio_R(s, ctx) - partial;
            BigRat s_pow_n(1);
            for (int k = 0; k < n; ++k) s_pow_n *= s;
            row.scaled_error = abs_real(remainder) * to_real(s_pow_n, bits);
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

ScalingCheck scaling_check(int n, const std::vector<std::pair<BigRat, BigRat>>& pairs,
                           const StirlingSeries& series, const PrecisionContext& ctx) {
    if (n + 1 > series.max_index())
        throw std::invalid_argument("scaling_check: needs the next coefficient in the series");
    const int bits = working_bits(ctx);
    ScalingCheck check;
    check.order = n;
    check.pass = true;
    const double expected = std::pow(2.0, n + 1);
    for (const auto& [s_small, s_big] : pairs) {
        Real err_small(0, bits), err_big(0, bits);
        err_small = ratio_R(s_small, ctx) - to_real(partial_sum_exact(s_small, n, series), bits);
        err_big = ratio_R(s_big, ctx) - to_real(partial_sum_exact(s_big, n, series), bits);
        ScalingRow row;
        row.s_small = s_small;
        row.s_big = s_big;
        row.expected = expected;
        row.ratio = make_real(bits);
        row.ratio = abs_real(err_small) / abs_real(err_big);
        const double r = row.ratio.get_d();
        row.pass = r >= 0.8 * expected && r <= 1.25 * expected;
        check.pass = check.pass && row.pass;
        check.rows.push_back(std::move(row));
    }
    return check;
}

}  // namespace stirling
