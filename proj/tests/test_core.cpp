#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <euler2/combinatorics.hpp>
#include <euler2/errors.hpp>
#include <euler2/rational.hpp>

#include <random>

using namespace euler2;

TEST_CASE("rationals are always canonical") {
    Rat r = make_rat(6, -9);
    CHECK(numerator_of(r) == -2);
    CHECK(denominator_of(r) == 3);
    CHECK(denominator_of(Rat(0)) == 1);
    CHECK(numerator_of(Rat(0)) == 0);
    CHECK_THROWS_AS(make_rat(1, 0), ParameterOutOfRange);

    std::mt19937 rng(20240917);
    std::uniform_int_distribution<int> num(-200, 200);
    std::uniform_int_distribution<int> den(-120, 120);
    for (int i = 0; i < 500; ++i) {
        int d = den(rng);
        if (d == 0) {
            continue;
        }
        Rat x = make_rat(num(rng), d);
        CHECK(denominator_of(x) >= 1);
        CHECK(boost::multiprecision::gcd(abs(numerator_of(x)), denominator_of(x)) == 1);
    }
}

TEST_CASE("canonical rendering") {
    CHECK(to_string(Rat(5)) == "5");
    CHECK(to_string(Rat(-1, 3)) == "-1/3");
    CHECK(to_string(make_rat(2, -4)) == "-1/2");
    CHECK(to_string(Rat(0)) == "0");
    CHECK(to_string(Rat("1982765468311237/1365")) == "1982765468311237/1365");
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(52, 26) == BigInt("495918532948104"));
    CHECK_THROWS_AS(factorial(-1), ParameterOutOfRange);
    CHECK_THROWS_AS(binomial(-1, 0), ParameterOutOfRange);
}

TEST_CASE("pascal rows match factorial quotients") {
    for (int n = 0; n <= 40; ++n) {
        for (int j = 0; j <= n; ++j) {
            CHECK(binomial(n, j) == factorial(n) / (factorial(j) * factorial(n - j)));
        }
    }
}

TEST_CASE("powers and double factorials") {
    CHECK(int_pow(BigInt(-3), 3) == -27);
    CHECK(int_pow(BigInt(7), 0) == 1);
    CHECK(int_pow(BigInt(2), 70) == BigInt("1180591620717411303424"));
    CHECK(rat_pow(Rat(-2, 3), 3) == Rat(-8, 27));
    CHECK(rat_pow(Rat(5, 7), 0) == 1);
    CHECK(odd_double_factorial(0) == 1);
    CHECK(odd_double_factorial(3) == 105);  // 1*3*5*7
    CHECK(odd_double_factorial(4) == factorial(9) / (int_pow(BigInt(2), 4) * factorial(4)));
}
