#include <doctest.h>

#include "naxes/scalar.hpp"

using namespace naxes;

namespace {
const FieldTag Q = FieldTag::rationals();
}

TEST_CASE("field tags") {
    CHECK(Q.is_rational());
    CHECK(Q.str() == "rational");

    FieldTag gf = FieldTag::prime(11);
    CHECK_FALSE(gf.is_rational());
    CHECK(gf.characteristic() == 11);
    CHECK(gf.str() == "GF(11)");

    CHECK_THROWS_WITH_AS(FieldTag::prime(2), "characteristic 2 is not supported", FieldError);
    CHECK_THROWS_WITH_AS(FieldTag::prime(9), "not a prime: 9", FieldError);
    CHECK_THROWS_WITH_AS(FieldTag::prime(7), "prime field too small: need p >= 11, got 7",
                         FieldError);
    CHECK_THROWS_AS(FieldTag::prime(1ull << 62), FieldError);
}

TEST_CASE("primality") {
    CHECK_FALSE(is_prime_u64(0));
    CHECK_FALSE(is_prime_u64(1));
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(10007));
    CHECK_FALSE(is_prime_u64(10005));
    CHECK(is_prime_u64(1009));
    CHECK(is_prime_u64((1ull << 61) - 1));
    CHECK_FALSE(is_prime_u64((1ull << 61) + 1));
}

TEST_CASE("rational parsing and canonical text") {
    CHECK(Scalar::from_string(Q, "3/5").str() == "3/5");
    CHECK(Scalar::from_string(Q, "-22/7").str() == "-22/7");
    CHECK(Scalar::from_string(Q, "6/4").str() == "3/2");
    CHECK(Scalar::from_string(Q, "-6/3").str() == "-2");
    CHECK(Scalar::from_string(Q, "0/9").str() == "0");
    CHECK(Scalar::from_string(Q, "123").str() == "123");

    CHECK_THROWS_WITH_AS(Scalar::from_string(Q, "1.5"),
                         "malformed scalar \"1.5\": expected \"num\" or \"num/den\"", ParseError);
    CHECK_THROWS_AS(Scalar::from_string(Q, ""), ParseError);
    CHECK_THROWS_AS(Scalar::from_string(Q, "1/"), ParseError);
    CHECK_THROWS_AS(Scalar::from_string(Q, "/3"), ParseError);
    CHECK_THROWS_AS(Scalar::from_string(Q, "+3"), ParseError);
    CHECK_THROWS_AS(Scalar::from_string(Q, "2/-3"), ParseError);
    CHECK_THROWS_AS(Scalar::from_string(Q, "2 / 3"), ParseError);
    CHECK_THROWS_WITH_AS(Scalar::from_string(Q, "1/0"), "malformed scalar \"1/0\": division by zero",
                         ParseError);
}

TEST_CASE("rational arithmetic") {
    Scalar a = Scalar::from_string(Q, "3/5");
    Scalar b = Scalar::from_string(Q, "2/3");
    CHECK((a + b).str() == "19/15");
    CHECK((a - b).str() == "-1/15");
    CHECK((a * b).str() == "2/5");
    CHECK((a / b).str() == "9/10");
    CHECK((-a).str() == "-3/5");
    CHECK(a.inverse().str() == "5/3");
    CHECK((a * a.inverse()).is_one());
    CHECK(Scalar::from_int(Q, 0).is_zero());
    CHECK_THROWS_WITH_AS(Scalar::from_int(Q, 0).inverse(), "division by zero", MathError);
    CHECK_THROWS_WITH_AS(a / Scalar::from_int(Q, 0), "division by zero", MathError);
    CHECK(a.to_double() == doctest::Approx(0.6));
    CHECK(a.rational() == mpq_class(3, 5));
}

TEST_CASE("prime field arithmetic") {
    FieldTag gf = FieldTag::prime(11);
    Scalar m1 = Scalar::from_int(gf, -1);
    CHECK(m1.residue() == 10);
    CHECK(m1.str() == "10");

    Scalar five = Scalar::from_int(gf, 5);
    CHECK(five.inverse().residue() == 9);
    CHECK((five * five.inverse()).is_one());
    CHECK(Scalar::from_string(gf, "3/5").residue() == 5); // 3 * 5^-1 = 27 = 5 (mod 11)
    CHECK(Scalar::from_string(gf, "-1/1").residue() == 10);
    CHECK_THROWS_WITH_AS(Scalar::from_string(gf, "3/22"),
                         "malformed scalar \"3/22\": denominator divisible by 11", ParseError);

    // Large modulus multiplication must not overflow.
    FieldTag big = FieldTag::prime((1ull << 61) - 1);
    Scalar x = Scalar::from_int(big, -2); // p - 2
    CHECK((x * x).residue() == 4);
}

TEST_CASE("reduction mod p") {
    FieldTag gf = FieldTag::prime(11);
    CHECK(Scalar::from_string(Q, "3/5").reduced(gf).residue() == 5);
    CHECK(Scalar::from_int(Q, -13).reduced(gf).residue() == 9);
    CHECK_THROWS_WITH_AS(Scalar::from_string(Q, "1/11").reduced(gf),
                         "denominator divisible by 11", MathError);
    // Reducing a residue into its own field is the identity.
    CHECK(Scalar::from_int(gf, 7).reduced(gf).residue() == 7);
}

TEST_CASE("mixed fields are rejected") {
    Scalar a = Scalar::from_int(Q, 1);
    Scalar b = Scalar::from_int(FieldTag::prime(11), 1);
    CHECK_THROWS_AS(a + b, FieldError);
    CHECK_THROWS_AS(a * b, FieldError);
    CHECK_THROWS_AS(require_same_field(Q, FieldTag::prime(11)), FieldError);
}
