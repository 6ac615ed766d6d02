#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratcalc/bigint.hpp"
#include "ratcalc/errors.hpp"
#include "ratcalc/rational.hpp"

#include <random>

using namespace ratcalc;

TEST_CASE("bigint round trips decimal strings") {
    for (const char* s : {"0", "1", "-1", "4294967295", "4294967296", "18446744073709551616",
                          "-340282366920938463463374607431768211456"}) {
        CHECK(BigInt::from_decimal(s).to_decimal() == s);
    }
    CHECK_THROWS_AS(BigInt::from_decimal("12x"), ParseError);
    CHECK_THROWS_AS(BigInt::from_decimal(""), ParseError);
}

TEST_CASE("bigint arithmetic agrees with int64 on random small values") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long long> dist(-1000000, 1000000);
    for (int i = 0; i < 2000; ++i) {
        long long a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).to_decimal() == std::to_string(a + b));
        CHECK((BigInt(a) - BigInt(b)).to_decimal() == std::to_string(a - b));
        CHECK((BigInt(a) * BigInt(b)).to_decimal() == std::to_string(a * b));
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_decimal() == std::to_string(a / b));
            CHECK((BigInt(a) % BigInt(b)).to_decimal() == std::to_string(a % b));
        }
        CHECK(BigInt(a).compare(BigInt(b)) == (a < b ? -1 : (a > b ? 1 : 0)));
    }
}

TEST_CASE("bigint multiplication hits the schoolbook carry chain") {
    // (2^128 - 1)^2 = 2^256 - 2^129 + 1
    BigInt big = BigInt::from_decimal("340282366920938463463374607431768211455");
    CHECK((big * big).to_decimal() ==
          "115792089237316195423570985008687907852589419931798687112530834793049593217025");
    BigInt q, r;
    BigInt::divmod(big * big, big, q, r);
    CHECK(q == big);
    CHECK(r.is_zero());
}

TEST_CASE("rational normalizes and prints exactly") {
    CHECK(Rational(6, 4).to_string() == "3/2");
    CHECK(Rational(-6, 4).to_string() == "-3/2");
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(0, 17).to_string() == "0");
    CHECK(Rational(8, 2).to_string() == "4");
    CHECK(Rational::from_string("21/14") == Rational(3, 2));
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK_THROWS_AS(Rational::from_string("1/"), ParseError);
}

TEST_CASE("rational field axioms on random values") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> dist(-40, 40);
    auto pick = [&] {
        long long d = 0;
        while (d == 0) d = dist(rng);
        return Rational(dist(rng), d);
    };
    for (int i = 0; i < 500; ++i) {
        Rational a = pick(), b = pick(), c = pick();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK(a / b * b == a);
        CHECK(a - a == Rational(0));
    }
}

TEST_CASE("rational promotes past int64 and comes back") {
    // 2^80 / 2 stays big; dividing by 2^40 lands in the small path again
    Rational big = Rational::from_string("1208925819614629174706176"); // 2^80
    Rational half = big / Rational(2);
    CHECK(half.to_string() == "604462909807314587353088");
    Rational small = half / Rational::from_string("1099511627776"); // 2^40
    CHECK(small.to_string() == "549755813888");                     // 2^39
    CHECK(small == Rational(549755813888ll));

    // overflow through multiplication of int64-range values
    Rational x(3037000499ll);
    Rational y = x * x * x;
    CHECK(y.to_string() == "28011385460385661648235251499");
    CHECK((y / x / x) == x);

    // equality across representations: (2^80)/(2^80) = 1
    CHECK(big / big == Rational(1));
    CHECK(big / big * Rational(3, 2) == Rational(3, 2));
}

TEST_CASE("rational exact comparison") {
    CHECK(Rational(1, 3) < Rational(34, 100));
    CHECK(Rational(-1, 2) < Rational(1, 1000000));
    Rational big = Rational::from_string("1208925819614629174706176");
    CHECK(Rational(1) < big);
    CHECK(big.compare(big) == 0);
    CHECK((-big).sign() == -1);
}
