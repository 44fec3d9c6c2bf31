#include "stirling/oracle.hpp"

#include <cmath>

namespace stirling {

namespace {

// g(x) at x = 4^-m by the alternating series x^2/2 - x^3/3 + ..., truncated
// at the first term below 10^-(digits+5). Powers of x are exact binary shifts.
Real g_series_at_4_pow(int m, int digits, int bits) {
    Real x(1, bits);
    mpf_div_2exp(x.get_mpf_t(), x.get_mpf_t(), static_cast<unsigned long>(2 * m));

    BigInt ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(digits + 5));
    Real threshold(0, bits);
    threshold = Real(1, bits) / to_real(BigRat(ten_pow), bits);

    Real p(0, bits), add(0, bits), sum(0, bits);
    p = x * x;
    sum = p / 2;
    for (unsigned long i = 3; i < 100000; ++i) {
        p = p * x;
        add = p / i;
        if (add < threshold) break;
        if (i % 2 == 1) sum -= add; else sum += add;
    }
    return sum;
}

}  // namespace

Method1Estimate method1_estimate(int n, const CoeffTable& known, const PrecisionContext& ctx) {
    if (n < 1) throw std::invalid_argument("method1: n must be >= 1");
    if (known.max_index() < n - 1)
        throw std::invalid_argument("method1: prefix must contain a_0..a_{n-1}");
    if (ctx.digits < 10 * (n + 2))
        throw std::invalid_argument("method1: need at least 10 (n+2) digits");

    const int bits = working_bits(ctx);
    std::vector<Real> prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) prefix.push_back(qsqrt2_to_real(known.a(k), ctx));

    // Sample schedule: each halving of sqrt(x) costs ~0.6 n digits in the
    // final division, so stop while ~20 digits of headroom remain.
    const int m_last = std::max(8, std::min(24, static_cast<int>((ctx.digits - 20) / (0.60206 * n))));

    Method1Estimate result;
    result.n = n;
    Real two_half_powers(1, bits);
    if (n % 2 == 1) two_half_powers = const_sqrt2(bits);
    mpf_mul_2exp(two_half_powers.get_mpf_t(), two_half_powers.get_mpf_t(),
                 static_cast<unsigned long>(n / 2));  // 2^(n/2)

    for (int m = 2; m <= m_last; ++m) {
        Real x(1, bits);
        mpf_div_2exp(x.get_mpf_t(), x.get_mpf_t(), static_cast<unsigned long>(2 * m));
        Real g = g_series_at_4_pow(m, ctx.digits, bits);
        Real w = sqrt_pos(g, bits);

        Real acc(0, bits), wpow(1, bits);
        acc = w / x;
        for (int k = 0; k < n; ++k) {
            acc -= prefix[static_cast<std::size_t>(k)] * wpow;
            wpow = wpow * w;
        }
        // divide by x^n = 2^(-2mn)
        mpf_mul_2exp(acc.get_mpf_t(), acc.get_mpf_t(), static_cast<unsigned long>(2 * m * n));
        Real estimate(0, bits);
        estimate = two_half_powers * acc;
        result.samples.emplace_back(x, estimate);
    }

    const Real& last = result.samples.back().second;
    const Real& prev = result.samples[result.samples.size() - 2].second;
    result.value = last;
    Real diff(0, bits);
    diff = last - prev;
    diff = abs_real(diff);
    if (sign_of(diff) == 0) {
        result.stabilized_digits = ctx.digits;
    } else if (sign_of(last) == 0) {
        result.stabilized_digits = 0;
    } else {
        long agree = exponent10(last) - exponent10(diff);
        result.stabilized_digits = static_cast<int>(std::max(0L, agree));
    }
    return result;
}

Method1Estimate method1_coefficient(int n, const CoeffTable& known, const PrecisionContext& ctx) {
    Method1Estimate estimate = method1_estimate(n, known, ctx);
    if (estimate.stabilized_digits < 4) {
        throw insufficient_precision(
            estimate, "method1: estimates for a_" + std::to_string(n) +
                          " did not stabilize (" + std::to_string(estimate.stabilized_digits) +
                          " digits); prefix wrong or precision too low");
    }
    return estimate;
}

std::vector<BigRat> bernoulli_numbers(int m_max) {
    if (m_max < 0) throw std::invalid_argument("bernoulli_numbers: m_max must be >= 0");
    std::vector<BigRat> b;
    b.reserve(static_cast<std::size_t>(m_max) + 1);
    b.emplace_back(1);
    for (int m = 1; m <= m_max; ++m) {
        BigRat sum(0);
        for (int j = 0; j < m; ++j) {
            BigInt binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m + 1),
                         static_cast<unsigned long>(j));
            sum += BigRat(binom) * b[static_cast<std::size_t>(j)];
        }
        BigRat bm = -sum / (m + 1);
        bm.canonicalize();
        b.push_back(bm);
    }
    return b;
}

StirlingSeries stirling_from_bernoulli(int n_max) {
    if (n_max < 0) throw std::invalid_argument("stirling_from_bernoulli: n_max must be >= 0");
    std::vector<BigRat> b = bernoulli_numbers(2 * n_max + 2);

    // mu_i (coefficient of t^i, t = 1/s): B_{i+1} / ((i+1) i) for odd i.
    std::vector<BigRat> mu(static_cast<std::size_t>(n_max) + 1, BigRat(0));
    for (int i = 1; i <= n_max; i += 2)
        mu[static_cast<std::size_t>(i)] =
            b[static_cast<std::size_t>(i + 1)] / ((i + 1) * i);

    // exp of a zero-constant-term series: k e_k = sum_{i=1..k} i mu_i e_{k-i}.
    StirlingSeries series;
    series.coeffs.assign(static_cast<std::size_t>(n_max) + 1, BigRat(0));
    series.coeffs[0] = 1;
    for (int k = 1; k <= n_max; ++k) {
        BigRat sum(0);
        for (int i = 1; i <= k; ++i)
            sum += i * mu[static_cast<std::size_t>(i)] * series.coeffs[static_cast<std::size_t>(k - i)];
        series.coeffs[static_cast<std::size_t>(k)] = sum / k;
    }
    for (auto& c : series.coeffs) c.canonicalize();
    return series;
}

}  // namespace stirling
