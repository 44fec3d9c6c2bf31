#include "stirling/precision.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace stirling {

namespace {

constexpr double kLog2Of10 = 3.3219280948873623;
constexpr int kGuardDigits = 12;

// Absolute threshold 2^-(bits + 24) used to cut series tails.
Real tail_eps(int bits) {
    Real eps(1, bits);
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), static_cast<unsigned long>(bits) + 24);
    return eps;
}

std::mutex g_const_mutex;

const Real& cached_constant(std::map<int, Real>& cache, int bits, Real (*compute)(int)) {
    std::lock_guard<std::mutex> lock(g_const_mutex);
    auto it = cache.find(bits);
    if (it == cache.end()) it = cache.emplace(bits, compute(bits)).first;
    return it->second;
}

Real compute_sqrt2(int bits) {
    const unsigned long scale = static_cast<unsigned long>(bits) + 16;
    BigInt n(1);
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), 2 * scale + 1);  // 2 * (2^scale)^2
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    Real out(0, bits);
    mpf_set_z(out.get_mpf_t(), root.get_mpz_t());
    mpf_div_2exp(out.get_mpf_t(), out.get_mpf_t(), scale);
    return out;
}

// sum_i (-1)^i / ((2i+1) u^(2i+1)) as an exact rational, truncated at the
// first term below 10^-(digits+5).
BigRat atan_inverse_exact(unsigned long u, long digits) {
    BigInt threshold;
    mpz_ui_pow_ui(threshold.get_mpz_t(), 10, static_cast<unsigned long>(digits + 5));
    BigInt upow(u);
    const BigInt u2 = BigInt(u) * u;
    BigRat sum(0);
    for (unsigned long i = 0;; ++i) {
        BigInt den = BigInt(2 * i + 1) * upow;
        if (den > threshold) break;
        BigRat term = make_rational(BigInt(1), den);
        if (i % 2 == 0) sum += term; else sum -= term;
        upow *= u2;
    }
    return sum;
}

Real compute_pi(int bits) {
    const long digits = static_cast<long>(bits / kLog2Of10) + 8;
    BigRat pi_q = 16 * atan_inverse_exact(5, digits) - 4 * atan_inverse_exact(239, digits);
    return to_real(pi_q, bits);  // rounded once here
}

Real compute_ln2(int bits) {
    // ln 2 = 2 atanh(1/3)
    const int wb = bits + 32;
    Real t = to_real(make_rational(1, 3), wb);
    Real t2(0, wb), term(0, wb), add(0, wb), sum(0, wb);
    t2 = t * t;
    term = t;
    sum = t;
    const Real eps = tail_eps(wb);
    for (unsigned long i = 1; i < 100000; ++i) {
        term = term * t2;
        add = term / (2 * i + 1);
        sum += add;
        if (add < eps) break;
    }
    Real out(0, bits);
    mpf_mul_2exp(sum.get_mpf_t(), sum.get_mpf_t(), 1);
    out = sum;
    return out;
}

Real compute_e(int bits) {
    const int wb = bits + 32;
    Real term(1, wb), sum(1, wb);
    const Real eps = tail_eps(wb);
    for (unsigned long i = 1; i < 10000; ++i) {
        term = term / i;
        sum += term;
        if (term < eps) break;
    }
    Real out(0, bits);
    out = sum;
    return out;
}

std::map<int, Real> g_sqrt2_cache;
std::map<int, Real> g_pi_cache;
std::map<int, Real> g_ln2_cache;
std::map<int, Real> g_e_cache;

}  // namespace

int working_bits(int digits) {
    return static_cast<int>((digits + kGuardDigits) * kLog2Of10) + 16;
}

int working_bits(const PrecisionContext& ctx) { return working_bits(ctx.digits); }

Real to_real(const BigRat& r, int bits) {
    Real out(0, bits);
    mpf_set_q(out.get_mpf_t(), r.get_mpq_t());
    return out;
}

Real to_real(long v, int bits) { return Real(v, bits); }

int sign_of(const Real& x) { return mpf_sgn(x.get_mpf_t()); }

Real abs_real(const Real& x) {
    Real out(0, static_cast<int>(x.get_prec()));
    mpf_abs(out.get_mpf_t(), x.get_mpf_t());
    return out;
}

long exponent10(const Real& x) {
    if (sign_of(x) == 0) throw std::domain_error("exponent10 of zero");
    mp_exp_t exp = 0;
    Real ax = abs_real(x);
    std::vector<char> buf(8);
    mpf_get_str(buf.data(), &exp, 10, 1, ax.get_mpf_t());
    // value = 0.M * 10^exp with leading digit nonzero
    return static_cast<long>(exp) - 1;
}

Real sqrt_pos(const Real& x, int bits) {
    const int s = sign_of(x);
    if (s < 0) throw std::domain_error("sqrt of negative value");
    if (s == 0) return make_real(bits);
    long e2 = 0;
    mpf_get_d_2exp(&e2, x.get_mpf_t());
    const long k = static_cast<long>(bits) + 16 - e2 / 2;
    Real scaled(0, 2 * (bits + 24));
    if (2 * k >= 0)
        mpf_mul_2exp(scaled.get_mpf_t(), x.get_mpf_t(), static_cast<unsigned long>(2 * k));
    else
        mpf_div_2exp(scaled.get_mpf_t(), x.get_mpf_t(), static_cast<unsigned long>(-2 * k));
    BigInt n;
    mpz_set_f(n.get_mpz_t(), scaled.get_mpf_t());
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    Real out(0, bits);
    mpf_set_z(out.get_mpf_t(), root.get_mpz_t());
    if (k >= 0)
        mpf_div_2exp(out.get_mpf_t(), out.get_mpf_t(), static_cast<unsigned long>(k));
    else
        mpf_mul_2exp(out.get_mpf_t(), out.get_mpf_t(), static_cast<unsigned long>(-k));
    return out;
}

const Real& const_sqrt2(int bits) { return cached_constant(g_sqrt2_cache, bits, compute_sqrt2); }
const Real& const_pi(int bits) { return cached_constant(g_pi_cache, bits, compute_pi); }
const Real& const_ln2(int bits) { return cached_constant(g_ln2_cache, bits, compute_ln2); }
const Real& const_e(int bits) { return cached_constant(g_e_cache, bits, compute_e); }

Real exp_real(const Real& x, int bits) {
    const int wb = bits + 32;
    if (sign_of(x) == 0) return Real(1, bits);

    const Real& ln2 = const_ln2(wb);
    Real q(0, wb);
    q = x / ln2;
    Real fq(0, wb);
    mpf_floor(fq.get_mpf_t(), q.get_mpf_t());
    if (abs_real(fq) > Real(1e12, 64)) throw std::overflow_error("exp argument out of range");
    const long n = mpf_get_si(fq.get_mpf_t());

    Real r(0, wb);
    r = x - fq * ln2;  // r in [0, ln2)
    const unsigned long halvings = 12;
    mpf_div_2exp(r.get_mpf_t(), r.get_mpf_t(), halvings);

    Real term(1, wb), sum(1, wb);
    const Real eps = tail_eps(wb);
    for (unsigned long i = 1; i < 10000; ++i) {
        term = term * r / i;
        sum += term;
        if (term < eps) break;
    }
    for (unsigned long i = 0; i < halvings; ++i) sum = sum * sum;

    Real out(0, bits);
    if (n >= 0)
        mpf_mul_2exp(sum.get_mpf_t(), sum.get_mpf_t(), static_cast<unsigned long>(n));
    else
        mpf_div_2exp(sum.get_mpf_t(), sum.get_mpf_t(), static_cast<unsigned long>(-n));
    out = sum;
    return out;
}

Real ln_real(const Real& x, int bits) {
    if (sign_of(x) <= 0) throw std::domain_error("ln of non-positive value");
    const int wb = bits + 32;

    long e2 = 0;
    mpf_get_d_2exp(&e2, x.get_mpf_t());
    Real y(0, wb);
    if (e2 >= 0)
        mpf_div_2exp(y.get_mpf_t(), x.get_mpf_t(), static_cast<unsigned long>(e2));
    else
        mpf_mul_2exp(y.get_mpf_t(), x.get_mpf_t(), static_cast<unsigned long>(-e2));
    // y in [0.5, 1); renormalize into [sqrt2/2, sqrt2)
    Real half_sqrt2(0, wb);
    mpf_div_2exp(half_sqrt2.get_mpf_t(), const_sqrt2(wb).get_mpf_t(), 1);
    if (y < half_sqrt2) {
        mpf_mul_2exp(y.get_mpf_t(), y.get_mpf_t(), 1);
        e2 -= 1;
    }

    Real t(0, wb), t2(0, wb), term(0, wb), add(0, wb), sum(0, wb);
    t = (y - 1) / (y + 1);  // |t| <= 0.1716
    t2 = t * t;
    term = t;
    sum = t;
    const Real eps = tail_eps(wb);
    for (unsigned long i = 1; i < 100000; ++i) {
        term = term * t2;
        add = term / (2 * i + 1);
        sum += add;
        if (abs_real(add) < eps) break;
    }
    mpf_mul_2exp(sum.get_mpf_t(), sum.get_mpf_t(), 1);  // 2 atanh

    Real e2r(0, wb);
    mpf_set_si(e2r.get_mpf_t(), e2);
    Real out(0, bits);
    out = sum + e2r * const_ln2(wb);
    return out;
}

Real pow_real(const Real& x, const Real& y, int bits) {
    if (sign_of(y) == 0) return Real(1, bits);
    const int wb = bits + 32;
    Real z(0, wb);
    z = y * ln_real(x, wb);
    return exp_real(z, bits);
}

std::string to_decimal_string(const Real& x, int digits) {
    if (digits < 1) throw std::invalid_argument("to_decimal_string: digits must be >= 1");
    const int s = sign_of(x);
    if (s == 0) return "0";

    Real ax = abs_real(x);
    const std::size_t want = static_cast<std::size_t>(digits) + 3;
    std::vector<char> buf(want + 8);
    mp_exp_t exp = 0;
    mpf_get_str(buf.data(), &exp, 10, want, ax.get_mpf_t());
    std::string m(buf.data());  // value = 0.m * 10^exp

    // Round to `digits` significant digits.
    if (m.size() > static_cast<std::size_t>(digits)) {
        bool round_up = m[digits] >= '5';
        m.resize(digits);
        if (round_up) {
            int i = digits - 1;
            while (i >= 0 && m[i] == '9') m[i--] = '0';
            if (i < 0) {
                m.insert(m.begin(), '1');
                m.resize(digits);
                ++exp;
            } else {
                ++m[i];
            }
        }
    }
    while (m.size() > 1 && m.back() == '0') m.pop_back();

    const long e = static_cast<long>(exp);
    std::string out;
    if (e > -3 && e <= digits) {
        if (e <= 0) {
            out = "0." + std::string(static_cast<std::size_t>(-e), '0') + m;
        } else if (m.size() > static_cast<std::size_t>(e)) {
            out = m.substr(0, static_cast<std::size_t>(e)) + "." + m.substr(static_cast<std::size_t>(e));
        } else {
            out = m + std::string(static_cast<std::size_t>(e) - m.size(), '0');
        }
    } else {
        out = m.substr(0, 1);
        if (m.size() > 1) out += "." + m.substr(1);
        out += "e";
        if (e - 1 >= 0) out += "+";
        out += std::to_string(e - 1);
    }
    return s < 0 ? "-" + out : out;
}

}  // namespace stirling
