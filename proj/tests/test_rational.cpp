#include <doctest.h>

#include <limits>
#include <random>
#include <sstream>

#include "delpezzo/rational.hpp"

using delpezzo::Rational;

TEST_CASE("rationals are stored in lowest terms with a positive denominator") {
    const Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(10, 5) == Rational(2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("printing uses p/q and drops a unit denominator") {
    CHECK(Rational(32, 3).str() == "32/3");
    CHECK(Rational(9).str() == "9");
    CHECK(Rational(-1, 2).str() == "-1/2");
    std::ostringstream os;
    os << Rational(4, 6);
    CHECK(os.str() == "2/3");
}

TEST_CASE("parsing accepts integers and fractions and rejects the rest") {
    CHECK(Rational::parse("1/3") == Rational(1, 3));
    CHECK(Rational::parse(" -4/6 ") == Rational(-2, 3));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("+2/4") == Rational(1, 2));
    for (const char* bad : {"", "1/", "/2", "1/0", "a", "1.5", "1/2/3", "1 /2", "--1", "+-1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
    }
}

TEST_CASE("floor and ceil round toward the correct integers") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(4).floor() == 4);
    CHECK(Rational(4).ceil() == 4);
}

TEST_CASE("arithmetic and ordering agree with cross multiplication") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 30);
    for (int i = 0; i < 500; ++i) {
        const std::int64_t a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        const Rational x(a, b), y(c, d);
        CHECK(x + y == Rational(a * d + c * b, b * d));
        CHECK(x - y == Rational(a * d - c * b, b * d));
        CHECK(x * y == Rational(a * c, b * d));
        if (c != 0) CHECK(x / y == Rational(a * d, b * c));
        CHECK((x < y) == (a * d < c * b));
        CHECK((x == y) == (a * d == c * b));
    }
}

TEST_CASE("overflow is reported instead of wrapping") {
    const Rational big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
    CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
    CHECK(big * Rational(1, 2) == Rational(std::numeric_limits<std::int64_t>::max(), 2));
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("min, max, abs and sign") {
    CHECK(min(Rational(1, 3), Rational(1, 4)) == Rational(1, 4));
    CHECK(max(Rational(1, 3), Rational(1, 4)) == Rational(1, 3));
    CHECK(Rational(-2, 3).abs() == Rational(2, 3));
    CHECK(Rational(-2, 3).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(-2, 3).inverse() == Rational(-3, 2));
}
