#include "doctest.h"

#include "twrep/error.hpp"
#include "twrep/field.hpp"

using namespace twrep;

TEST_CASE("prime field arithmetic") {
    Field f = Field::prime(7);
    Scalar a(f, 3), b(f, 5);
    CHECK((a + b).residue() == 1);
    CHECK((a - b).residue() == 5);
    CHECK((a * b).residue() == 1);
    CHECK((a * a.inverse()) == Scalar::one(f));
    CHECK(Scalar(f, -1).residue() == 6);
    CHECK(Scalar::parse(f, "-8").residue() == 6);
}

TEST_CASE("rational arithmetic stays canonical") {
    Field q = Field::rationals();
    Scalar a = Scalar::parse(q, "2/4");
    CHECK(a.to_string() == "1/2");
    CHECK((a + a) == Scalar::one(q));
    CHECK(Scalar::parse(q, "3").to_string() == "3/1");
    CHECK(Scalar::parse(q, "-6/-4").to_string() == "3/2");
    CHECK_THROWS_AS(Scalar::zero(q).inverse(), Error);
}

TEST_CASE("field parsing and validation") {
    CHECK(parse_field("Q") == Field::rationals());
    CHECK(parse_field("Fp:5") == Field::prime(5));
    CHECK_THROWS_AS(Field::prime(6), Error);
    CHECK_THROWS_AS(parse_field("R"), Error);
    CHECK(Field::prime(2147483647).characteristic() == 2147483647u);
}

TEST_CASE("mixing fields is rejected") {
    Scalar a(Field::prime(5), 1), b(Field::prime(7), 1);
    try {
        (void)(a + b);
        FAIL("expected FieldMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FieldMismatch);
    }
}
