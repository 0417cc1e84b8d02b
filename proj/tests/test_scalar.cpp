#include <doctest.h>

#include <random>

#include "dotpairs/scalar.hpp"
#include "support/random_instances.hpp"

using namespace dotpairs;
namespace dt = dotpairs::testing;

TEST_CASE("rational arithmetic is exact and reduced") {
    const Scalar half = Scalar::rational(1, 2);
    const Scalar third = Scalar::rational(1, 3);
    CHECK((half + third).str() == "5/6");
    CHECK(Scalar::rational(2, 4) == half);
    CHECK(Scalar::rational(-3, 6).str() == "-1/2");
    CHECK((half - half).is_zero());
    CHECK((half * Scalar::rational(2)).str() == "1");
    CHECK((third / half).str() == "2/3");
    CHECK((-Scalar::rational(0)).str() == "0"); // zero stays 0/1
}

TEST_CASE("prime field arithmetic") {
    const FieldSpec f7 = FieldSpec::prime_field(7);
    const Scalar three = Scalar::residue(3, f7);
    const Scalar five = Scalar::residue(5, f7);
    CHECK((three * five).residue_value() == 1); // 15 mod 7
    CHECK((three + five).residue_value() == 1);
    CHECK((three - five).residue_value() == 5);
    CHECK((three / five).residue_value() == 2); // 5 * 2 = 10 = 3 mod 7
    CHECK((-three).residue_value() == 4);
    CHECK(Scalar::residue(-1, f7).residue_value() == 6);
}

TEST_CASE("field creation validates primality") {
    CHECK_THROWS_AS(FieldSpec::prime_field(1), DomainError);
    CHECK_THROWS_AS(FieldSpec::prime_field(6), DomainError);
    CHECK_THROWS_AS(FieldSpec::prime_field(-7), DomainError);
    CHECK_THROWS_AS(FieldSpec::prime_field(91), DomainError); // 7 * 13
    CHECK(FieldSpec::prime_field(2).characteristic_two());
    CHECK_FALSE(FieldSpec::prime_field(101).characteristic_two());
    CHECK_FALSE(FieldSpec::rationals().characteristic_two());
}

TEST_CASE("division by zero and mixed fields are rejected") {
    const Scalar one = Scalar::rational(1);
    CHECK_THROWS_AS(one / Scalar::rational(0), DivisionByZeroError);
    const FieldSpec f7 = FieldSpec::prime_field(7);
    CHECK_THROWS_AS(Scalar::one(f7) / Scalar::zero(f7), DivisionByZeroError);
    CHECK_THROWS_AS(one + Scalar::one(f7), FieldMismatchError);
    CHECK_THROWS_AS((void)(one == Scalar::one(f7)), FieldMismatchError);
    CHECK_THROWS_AS(Scalar::one(f7) + Scalar::one(FieldSpec::prime_field(3)),
                    FieldMismatchError);
}

TEST_CASE("parse_scalar handles both grammars") {
    const FieldSpec rat = FieldSpec::rationals();
    CHECK(parse_scalar("-3/6", rat) == Scalar::rational(-1, 2));
    CHECK(parse_scalar("7", rat) == Scalar::rational(7));
    CHECK(parse_scalar("+2/8", rat).str() == "1/4");
    const FieldSpec f7 = FieldSpec::prime_field(7);
    CHECK(parse_scalar("10", f7).residue_value() == 3);
    CHECK(parse_scalar("-1", f7).residue_value() == 6);
    CHECK_THROWS_AS(parse_scalar("1/0", rat), DivisionByZeroError);
    CHECK_THROWS_AS(parse_scalar("", rat), ParseError);
    CHECK_THROWS_AS(parse_scalar("a/b", rat), ParseError);
    CHECK_THROWS_AS(parse_scalar("1.5", rat), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/2", f7), ParseError);
}

TEST_CASE("field axioms hold on random triples, both backends") {
    std::mt19937_64 rng(20240817);
    const FieldSpec backends[] = {FieldSpec::rationals(), FieldSpec::prime_field(7),
                                  FieldSpec::prime_field(101)};
    for (const FieldSpec& field : backends) {
        for (int iter = 0; iter < 200; ++iter) {
            const Scalar a = dt::random_scalar(rng, field, false);
            const Scalar b = dt::random_scalar(rng, field, false);
            const Scalar c = dt::random_scalar(rng, field, false);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) {
                CHECK(a / a == Scalar::one(field));
                CHECK((b / a) * a == b);
            }
        }
    }
}

TEST_CASE("parse after format is the identity") {
    std::mt19937_64 rng(7);
    const FieldSpec backends[] = {FieldSpec::rationals(), FieldSpec::prime_field(101)};
    for (const FieldSpec& field : backends) {
        for (int iter = 0; iter < 200; ++iter) {
            const Scalar a = dt::random_scalar(rng, field, false);
            CHECK(parse_scalar(format_scalar(a), field) == a);
        }
    }
}
