#include "obstra/error.hpp"
#include "obstra/rational.hpp"

#include <doctest.h>

#include <random>

using namespace obstra;

TEST_CASE("rational canonical form") {
    CHECK(Rat(3, 6).str() == "1/2");
    CHECK(Rat(-2, 4).str() == "-1/2");
    CHECK(Rat(2, -4).str() == "-1/2");
    CHECK(Rat(0, 7).str() == "0");
    CHECK(Rat(5).str() == "5");
    CHECK(Rat(7, 1).str() == "7");
}

TEST_CASE("rational parse and round trip") {
    CHECK(Rat::parse("3/6") == Rat(1, 2));
    CHECK(Rat::parse("-10/4") == Rat(-5, 2));
    CHECK(Rat::parse("42") == Rat(42));
    CHECK(Rat::parse("-0") == Rat(0));
    CHECK_THROWS_AS(Rat::parse("1/0"), Error);
    CHECK_THROWS_AS(Rat::parse("abc"), Error);
    CHECK_THROWS_AS(Rat::parse("1.5"), Error);
    CHECK_THROWS_AS(Rat::parse("1/ 2"), Error);
    CHECK_THROWS_AS(Rat::parse(""), Error);
    CHECK_THROWS_AS(Rat::parse("+3"), Error);

    std::mt19937_64 rng(20260814);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
    for (int i = 0; i < 500; ++i) {
        Rat r(num(rng), den(rng));
        CHECK(Rat::parse(r.str()) == r);
    }
}

TEST_CASE("rational arithmetic") {
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
    CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
    CHECK_THROWS_AS(Rat(1) / Rat(0), Error);
    CHECK(-Rat(3, 7) == Rat(-3, 7));
    CHECK(Rat(-3, 7).abs() == Rat(3, 7));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(-1, 3));
    CHECK(Rat(2).is_integer());
    CHECK(!Rat(1, 2).is_integer());
    CHECK(Rat(-4, 2).sign() == -1);
    CHECK(Rat(0).sign() == 0);
}

TEST_CASE("rational floor") {
    CHECK(rat_floor(Rat(7, 2)) == Rat(3));
    CHECK(rat_floor(Rat(-7, 2)) == Rat(-4));
    CHECK(rat_floor(Rat(4)) == Rat(4));
    CHECK(rat_floor(Rat(-4)) == Rat(-4));
    CHECK(rat_floor(Rat(0)) == Rat(0));
}

TEST_CASE("rational huge values stay exact") {
    Rat big(1);
    for (int i = 0; i < 200; ++i) big = big * Rat(10) + Rat(1, 3);
    Rat back = big;
    for (int i = 0; i < 200; ++i) back = (back - Rat(1, 3)) / Rat(10);
    CHECK(back == Rat(1));
}
