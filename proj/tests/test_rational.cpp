#include <catch2/catch_amalgamated.hpp>

#include "toprec/rational.hpp"

using namespace toprec;

TEST_CASE("construction normalizes sign and gcd", "[rational]") {
    CHECK(BigRational(2, 4) == BigRational(1, 2));
    CHECK(BigRational(-2, 4) == BigRational(1, -2));
    CHECK(BigRational(3, -6).str() == "-1/2");
    CHECK(BigRational(-3, -6).str() == "1/2");
    CHECK(BigRational(0, 7) == BigRational(0));
    CHECK(BigRational(42).str() == "42");
    CHECK_THROWS_AS(BigRational(1, 0), arithmetic_error);
}

TEST_CASE("string parsing and round trip", "[rational]") {
    CHECK(BigRational("245/429981696") == BigRational(245, 429981696));
    CHECK(BigRational("-7") == BigRational(-7));
    CHECK_THROWS_AS(BigRational("seven"), arithmetic_error);

    const BigRational big = BigRational::from_parts("190210142896128", "41278242816");
    CHECK(big == BigRational(190210142896128L, 41278242816L));
    CHECK(BigRational::from_parts(big.num_str(), big.den_str()) == big);

    // Larger than any machine word on both sides.
    const BigRational huge =
        BigRational::from_parts("123456789012345678901234567890", "987654321098765432109876543210");
    CHECK(BigRational::from_parts(huge.num_str(), huge.den_str()) == huge);
}

TEST_CASE("field arithmetic", "[rational]") {
    const BigRational a(3, 4), b(-5, 6);
    CHECK(a + b == BigRational(-1, 12));
    CHECK(a - b == BigRational(19, 12));
    CHECK(a * b == BigRational(-5, 8));
    CHECK(a / b == BigRational(-9, 10));
    CHECK(-a == BigRational(-3, 4));
    CHECK_THROWS_AS(a / BigRational(0), arithmetic_error);

    BigRational c = a;
    c += b;
    c *= BigRational(12);
    CHECK(c == BigRational(-1));
}

TEST_CASE("powers", "[rational]") {
    CHECK(BigRational(2, 3).pow(3) == BigRational(8, 27));
    CHECK(BigRational(2, 3).pow(-2) == BigRational(9, 4));
    CHECK(BigRational(5).pow(0) == BigRational(1));
    CHECK(BigRational(0).pow(4) == BigRational(0));
    CHECK_THROWS_AS(BigRational(0).pow(-1), arithmetic_error);
}

TEST_CASE("ordering and predicates", "[rational]") {
    CHECK(BigRational(1, 3) < BigRational(1, 2));
    CHECK(BigRational(-1, 2) < BigRational(-1, 3));
    CHECK(BigRational(6, 3).is_integer());
    CHECK_FALSE(BigRational(1, 3).is_integer());
    CHECK(BigRational(0).is_zero());
    CHECK(BigRational(7, 7).is_one());
}
