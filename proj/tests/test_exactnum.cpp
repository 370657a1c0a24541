#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "laxforge/scalar.hpp"

using namespace laxforge;

namespace {

std::mt19937 rng(20240915);

Rational random_rational() {
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 9);
    return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

Scalar random_scalar() {
    return Scalar(random_rational(), random_rational(), random_rational(), random_rational());
}

}  // namespace

TEST_CASE("rational normalization and parsing") {
    Rational r(BigInt(6), BigInt(-8));
    CHECK(r.num() == -3);
    CHECK(r.den() == 4);
    CHECK(Rational::parse("-3/4") == r);
    CHECK(Rational::parse("5").is_integer());
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("conjugate pair products") {
    Scalar one_plus_i(Rational(1), Rational(1), Rational(0), Rational(0));
    Scalar one_minus_i = one_plus_i.conj_i();
    CHECK(one_plus_i * one_minus_i == Scalar(2));

    // (i sqrt7 / 2)^2 = -7/4
    Scalar x(Rational(0), Rational(0), Rational(0), Rational(BigInt(1), BigInt(2)));
    CHECK(x * x == Scalar(Rational(BigInt(-7), BigInt(4))));

    // (-1/2 + i sqrt7/2)(-1/2 - i sqrt7/2) = 1/4 + 7/4 = 2
    Scalar p(Rational(BigInt(-1), BigInt(2)), Rational(0), Rational(0),
             Rational(BigInt(1), BigInt(2)));
    CHECK(p * p.conj_i() == Scalar(2));
}

TEST_CASE("inverses") {
    CHECK(Scalar(2).inverse() == Scalar::rat(1, 2));
    CHECK(Scalar::i().inverse() == -Scalar::i());
    Scalar p(Rational(BigInt(-1), BigInt(2)), Rational(0), Rational(0),
             Rational(BigInt(1), BigInt(2)));
    // inv(-1/2 + i sqrt7/2) = (-1/2 - i sqrt7/2)/2
    CHECK(p.inverse() == p.conj_i() * Scalar::rat(1, 2));
    CHECK(p * p.inverse() == Scalar(1));
    CHECK_THROWS_AS(Scalar().inverse(), std::domain_error);
}

TEST_CASE("field axioms on random quadruples") {
    for (int trial = 0; trial < 200; ++trial) {
        Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Scalar(1));
        }
    }
}

TEST_CASE("floating embedding is multiplicative to 1e-12") {
    for (int trial = 0; trial < 200; ++trial) {
        Scalar a = random_scalar(), b = random_scalar();
        auto lhs = (a * b).to_complex();
        auto rhs = a.to_complex() * b.to_complex();
        CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("canonical text form") {
    Scalar p(Rational(BigInt(-1), BigInt(2)), Rational(0), Rational(0),
             Rational(BigInt(1), BigInt(2)));
    CHECK(p.str() == "(-1/2+1/2*i*s7)");
    CHECK(Scalar::i().str() == "i");
    CHECK(Scalar().str() == "0");
}
