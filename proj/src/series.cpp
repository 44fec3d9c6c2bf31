#include "stirling/series.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace stirling {

CoeffTable compute_coefficients(int n_max) {
    if (n_max < 0) throw std::invalid_argument("compute_coefficients: n_max must be >= 0");
    CoeffTable table;
    table.coeffs.reserve(static_cast<std::size_t>(n_max) + 1);
    table.coeffs.emplace_back(BigRat(0), make_rational(1, 2));  // a_0 = sqrt(2)/2

    const auto& a = table.coeffs;
    for (int n = 1; n <= n_max; ++n) {
        QSqrt2 sum;
        for (int k = 0; k < n; ++k) {
            for (int j = 0; j < n; ++j) {
                const int l = n - k - j;
                if (l < 0 || l >= n) continue;
                sum += a[k] * a[j] * a[l];
            }
        }
        for (int k = 0; k < n; ++k) sum += a[k] * a[n - 1 - k];
        sum *= QSqrt2::rational(make_rational(-2, n + 2));
        table.coeffs.push_back(sum);
    }
    return table;
}

const CoeffTable& shared_coefficients(int n_max) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const CoeffTable>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.lower_bound(n_max);
    if (it == cache.end()) {
        const int key = ((n_max + 7) / 8) * 8;
        it = cache.emplace(key, std::make_unique<const CoeffTable>(compute_coefficients(key))).first;
    }
    return *it->second;
}

BigRat gamma_half_integer_ratio(int k) {
    if (k < 0) throw std::invalid_argument("gamma_half_integer_ratio: k must be >= 0");
    BigInt num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(2 * k));
    BigInt den;
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(k));
    BigInt four_k(1);
    mpz_mul_2exp(four_k.get_mpz_t(), four_k.get_mpz_t(), static_cast<unsigned long>(2 * k));
    return make_rational(num, den * four_k);
}

StirlingSeries stirling_coefficients(const CoeffTable& table) {
    StirlingSeries series;
    const int k_max = table.max_index() / 2;
    series.coeffs.reserve(static_cast<std::size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) {
        const QSqrt2& a2k = table.a(2 * k);
        if (!a2k.is_sqrt2_multiple())
            throw parity_error(2 * k, "coefficient a_" + std::to_string(2 * k) +
                                          " is not a pure sqrt(2) multiple");
        series.coeffs.push_back(2 * a2k.sqrt2_part() * gamma_half_integer_ratio(k));
    }
    return series;
}

Real maclaurin_eval(const CoeffTable& table, const Real& v, int n, const PrecisionContext& ctx) {
    if (n < 0 || n > table.max_index())
        throw std::invalid_argument("maclaurin_eval: order outside table");
    const int bits = working_bits(ctx);
    Real acc = qsqrt2_to_real(table.a(n), ctx);
    for (int k = n - 1; k >= 0; --k) {
        Real next(0, bits);
        next = acc * v + qsqrt2_to_real(table.a(k), ctx);
        acc = next;
    }
    return acc;
}

}  // namespace stirling
