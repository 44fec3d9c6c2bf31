#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stirling/field.hpp"
#include "stirling/precision.hpp"

using namespace stirling;

namespace {

QSqrt2 random_element(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 30);
    return QSqrt2(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("arithmetic on simple elements") {
    QSqrt2 half_sqrt2(BigRat(0), make_rational(1, 2));
    QSqrt2 minus_third(make_rational(-1, 3), BigRat(0));

    CHECK(half_sqrt2 * half_sqrt2 == QSqrt2(make_rational(1, 2), BigRat(0)));
    CHECK(half_sqrt2 * minus_third == QSqrt2(BigRat(0), make_rational(-1, 6)));

    QSqrt2 mixed(BigRat(1), BigRat(1));
    CHECK(mixed / mixed == QSqrt2(BigRat(1), BigRat(0)));
}

TEST_CASE("division by zero is rejected") {
    QSqrt2 one(BigRat(1), BigRat(0));
    CHECK_THROWS_AS(one / QSqrt2(), std::domain_error);
}

TEST_CASE("field laws on random elements") {
    std::mt19937 rng(20240817);
    for (int i = 0; i < 200; ++i) {
        QSqrt2 a = random_element(rng);
        QSqrt2 b = random_element(rng);
        QSqrt2 c = random_element(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("construction canonicalizes components") {
    BigRat two_quarters(2, 4);  // deliberately unreduced
    QSqrt2 x(two_quarters, two_quarters);
    CHECK(x.rational_part().get_num() == 1);
    CHECK(x.rational_part().get_den() == 2);
    QSqrt2 again(x.rational_part(), x.sqrt2_part());
    CHECK(again == x);
}

TEST_CASE("canonical text rendering") {
    CHECK(QSqrt2().to_string() == "0");
    CHECK(QSqrt2(BigRat(0), make_rational(1, 2)).to_string() == "1/2*sqrt(2)");
    CHECK(QSqrt2(make_rational(-1, 3), BigRat(0)).to_string() == "-1/3");
    CHECK(QSqrt2(BigRat(0), make_rational(-139, 194400)).to_string() == "-139/194400*sqrt(2)");
    CHECK(QSqrt2(BigRat(1), BigRat(1)).to_string() == "1 + 1*sqrt(2)");
    CHECK(QSqrt2(BigRat(1), make_rational(-1, 3)).to_string() == "1 - 1/3*sqrt(2)");
    CHECK(QSqrt2(BigRat(5), BigRat(0)).to_string() == "5");
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("21/2") == make_rational(21, 2));
    CHECK(parse_rational("10.5") == make_rational(21, 2));
    CHECK(parse_rational("-0.125") == make_rational(-1, 8));
    CHECK(parse_rational("1e-6") == make_rational(1, 1000000));
    CHECK(parse_rational("2.5e3") == BigRat(2500));
    CHECK_THROWS(parse_rational("abc"));
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("decimal conversion of sqrt(2)/2") {
    QSqrt2 half_sqrt2(BigRat(0), make_rational(1, 2));
    CHECK(qsqrt2_to_decimal(half_sqrt2, PrecisionContext(30)) ==
          "0.707106781186547524400844362105");
}

TEST_CASE("decimal conversion of exact rationals and zero") {
    QSqrt2 twelfth(make_rational(1, 12), BigRat(0));
    CHECK(qsqrt2_to_decimal(twelfth, PrecisionContext(20)) == "0.083333333333333333333");
    CHECK(qsqrt2_to_decimal(QSqrt2(), PrecisionContext(20)) == "0");
}

TEST_CASE("decimal conversion stable under extra precision") {
    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        QSqrt2 x = random_element(rng);
        if (x.is_zero()) continue;
        for (int p : {20, 40}) {
            Real lo = qsqrt2_to_real(x, PrecisionContext(p));
            Real hi = qsqrt2_to_real(x, PrecisionContext(p + 10));
            const int bits = working_bits(p + 10);
            Real diff(0, bits);
            diff = lo - hi;
            Real bound(0, bits);
            bound = abs_real(hi);
            for (int d = 0; d < p - 2; ++d) bound = bound / 10;
            CHECK(abs_real(diff) <= bound);
        }
    }
}
