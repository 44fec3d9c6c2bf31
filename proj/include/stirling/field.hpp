#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace stirling {

// Exact arbitrary-precision integers and rationals. BigRat values are kept
// canonical: lowest terms, denominator > 0, zero stored as 0/1.
using BigInt = mpz_class;
using BigRat = mpq_class;

BigRat make_rational(long num, long den = 1);
BigRat make_rational(const BigInt& num, const BigInt& den);

// Accepts "p/q", integer, and plain decimal strings ("-0.125", "1e-6").
BigRat parse_rational(const std::string& text);

// "p/q", or just "p" when the denominator is 1; sign leading.
std::string to_string(const BigRat& r);

class QSqrt2;
QSqrt2 operator+(const QSqrt2& a, const QSqrt2& b);
QSqrt2 operator-(const QSqrt2& a, const QSqrt2& b);
QSqrt2 operator*(const QSqrt2& a, const QSqrt2& b);
QSqrt2 operator/(const QSqrt2& a, const QSqrt2& b);

// An element p + q*sqrt(2) of the field Q(sqrt 2). The pair (p, q) is unique
// because sqrt 2 is irrational. Closed under +, -, *, /; division goes
// through the conjugate, whose norm p^2 - 2 q^2 vanishes only at 0.
class QSqrt2 {
public:
    QSqrt2() : p_(0), q_(0) {}
    QSqrt2(BigRat rational_part, BigRat sqrt2_part)
        : p_(std::move(rational_part)), q_(std::move(sqrt2_part)) {
        p_.canonicalize();
        q_.canonicalize();
    }
    explicit QSqrt2(long rational_part) : p_(rational_part), q_(0) {}

    static QSqrt2 rational(const BigRat& p) { return QSqrt2(p, BigRat(0)); }
    static QSqrt2 sqrt2_multiple(const BigRat& q) { return QSqrt2(BigRat(0), q); }

    const BigRat& rational_part() const { return p_; }
    const BigRat& sqrt2_part() const { return q_; }

    bool is_zero() const { return p_ == 0 && q_ == 0; }
    bool is_rational() const { return q_ == 0; }
    bool is_sqrt2_multiple() const { return p_ == 0; }

    QSqrt2 operator-() const { return QSqrt2(-p_, -q_); }
    QSqrt2& operator+=(const QSqrt2& o);
    QSqrt2& operator-=(const QSqrt2& o);
    QSqrt2& operator*=(const QSqrt2& o);
    QSqrt2& operator/=(const QSqrt2& o);

    friend bool operator==(const QSqrt2& a, const QSqrt2& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const QSqrt2& a, const QSqrt2& b) { return !(a == b); }

    // Canonical rendering: "p/q" for rationals, "r*sqrt(2)" for pure sqrt-2
    // multiples, "p + q*sqrt(2)" (or "p - q*sqrt(2)") for mixed values,
    // "0" for zero. Fractions reduced, sign leading.
    std::string to_string() const;

private:
    BigRat p_;
    BigRat q_;
};

struct PrecisionContext;

// Rounds p + q*sqrt(2) to the context precision; error stays within one unit
// in the last requested digit. sqrt 2 comes from an integer square root, not
// from any environment constant.
mpf_class qsqrt2_to_real(const QSqrt2& a, const PrecisionContext& ctx);
std::string qsqrt2_to_decimal(const QSqrt2& a, const PrecisionContext& ctx);

}  // namespace stirling
