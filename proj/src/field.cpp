#include "stirling/field.hpp"

#include <cctype>

#include "stirling/precision.hpp"

namespace stirling {

BigRat make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

BigRat make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

BigRat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    if (text.find('/') != std::string::npos) {
        BigRat r;
        if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
            throw std::invalid_argument("bad rational literal: " + text);
        if (r.get_den() == 0) throw std::domain_error("rational with zero denominator");
        r.canonicalize();
        return r;
    }

    // Decimal form: [sign] digits [. digits] [e [sign] digits]
    std::string mantissa;
    long exp10 = 0;
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    bool any_digit = false;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
        mantissa += text[i];
        any_digit = true;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            mantissa += text[i];
            --exp10;
            any_digit = true;
        }
    }
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        std::size_t
            start = i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw std::invalid_argument("bad exponent in: " + text);
        exp10 += std::stol(text.substr(start, i - start));
    }
    if (!any_digit || i != text.size())
        throw std::invalid_argument("bad decimal literal: " + text);

    BigInt num(mantissa.empty() ? "0" : mantissa);
    if (negative) num = -num;
    BigInt den(1);
    if (exp10 > 0) {
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10));
        num *= scale;
    } else if (exp10 < 0) {
        mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(-exp10));
    }
    return make_rational(num, den);
}

std::string to_string(const BigRat& r) {
    return r.get_str();  // canonical "num/den" or "num"
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
    p_ += o.p_;
    q_ += o.q_;
    return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
    p_ -= o.p_;
    q_ -= o.q_;
    return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
    // (p + q s)(p' + q' s) = pp' + 2qq' + (pq' + qp') s,  s = sqrt 2
    BigRat p = p_ * o.p_ + 2 * q_ * o.q_;
    BigRat q = p_ * o.q_ + q_ * o.p_;
    p_ = std::move(p);
    q_ = std::move(q);
    return *this;
}

QSqrt2& QSqrt2::operator/=(const QSqrt2& o) {
    BigRat norm = o.p_ * o.p_ - 2 * o.q_ * o.q_;
    if (norm == 0) throw std::domain_error("QSqrt2: division by zero");
    QSqrt2 conj(o.p_ / norm, -o.q_ / norm);
    return *this *= conj;
}

QSqrt2 operator+(const QSqrt2& a, const QSqrt2& b) { QSqrt2 r = a; return r += b; }
QSqrt2 operator-(const QSqrt2& a, const QSqrt2& b) { QSqrt2 r = a; return r -= b; }
QSqrt2 operator*(const QSqrt2& a, const QSqrt2& b) { QSqrt2 r = a; return r *= b; }
QSqrt2 operator/(const QSqrt2& a, const QSqrt2& b) { QSqrt2 r = a; return r /= b; }

std::string QSqrt2::to_string() const {
    if (is_zero()) return "0";
    if (q_ == 0) return stirling::to_string(p_);
    if (p_ == 0) return stirling::to_string(q_) + "*sqrt(2)";
    std::string out = stirling::to_string(p_);
    if (q_ > 0) {
        out += " + " + stirling::to_string(q_) + "*sqrt(2)";
    } else {
        out += " - " + stirling::to_string(BigRat(-q_)) + "*sqrt(2)";
    }
    return out;
}

Real qsqrt2_to_real(const QSqrt2& a, const PrecisionContext& ctx) {
    const int bits = working_bits(ctx);
    Real value = to_real(a.rational_part(), bits);
    if (a.sqrt2_part() != 0) {
        Real q = to_real(a.sqrt2_part(), bits);
        value += q * const_sqrt2(bits);
    }
    return value;
}

std::string qsqrt2_to_decimal(const QSqrt2& a, const PrecisionContext& ctx) {
    return to_decimal_string(qsqrt2_to_real(a, ctx), ctx.digits);
}

}  // namespace stirling
