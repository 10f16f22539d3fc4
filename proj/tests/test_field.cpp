#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wcurve/field.hpp"

using namespace wcurve;

TEST_CASE("prime field arithmetic mod 7") {
  Field f = Field::make(FieldSpec::prime_field(7));
  CHECK(f.characteristic() == 7);
  CHECK(f.order() == 7);
  CHECK(f.degree() == 1);
  CHECK((f(3) + f(5)) == f(1));
  CHECK((f(3) * f(5)) == f(1));
  CHECK((f(3) - f(5)) == f(5));
  CHECK((-f(3)) == f(4));
  CHECK(f(3).inv() == f(5));
  CHECK((f(3) / f(5)) == f(2));
  CHECK(pow(f(3), 6) == f.one());
  CHECK(pow(f(3), 0) == f.one());
  CHECK(pow(f(3), -1) == f(5));
  CHECK(f(-1) == f(6));
  CHECK(f(700) == f.zero());
  CHECK((2 * f(4)) == f.one());
}

TEST_CASE("every nonzero element has a working inverse") {
  for (const char* spec : {"q(2)", "q(31)", "q(2^4)", "q(3^2)"}) {
    Field f = Field::parse(spec);
    CAPTURE(spec);
    for (std::uint64_t i = 1; i < f.order(); ++i) {
      FieldElement a = f.element(i);
      CHECK((a * a.inv()) == f.one());
    }
  }
}

TEST_CASE("GF(4) multiplication table") {
  Field f = Field::parse("q(2^2)");  // modulus T^2 + T + 1
  FieldElement t = f.element(2);     // [0,1]
  FieldElement t1 = f.element(3);    // [1,1]
  CHECK((t * t) == t1);              // T^2 = T + 1
  CHECK((t * t1) == f.one());        // T^3 = 1
  CHECK(t.inv() == t1);
  CHECK((t + t) == f.zero());        // characteristic 2
  CHECK((t + t1) == f.one());
  CHECK(pow(t, 3) == f.one());
}

TEST_CASE("GF(16) built-in modulus T^4 + T + 1") {
  Field f = Field::parse("q(2^4)");
  CHECK(f.order() == 16);
  FieldElement t = f.element(2);
  CHECK(pow(t, 4) == (t + f.one()));
  CHECK(pow(t, 5) == f.parse_element("[0,1,1,0]"));  // T^2 + T
  CHECK(pow(t, 15) == f.one());
  CHECK(t.inv() == f.parse_element("[1,0,0,1]"));  // T^3 + 1
}

TEST_CASE("GF(9) with modulus T^2 + 1") {
  Field f = Field::parse("q(3^2)");
  CHECK(f.characteristic() == 3);
  CHECK(f.order() == 9);
  FieldElement t = f.element(3);  // [0,1]
  CHECK((t * t) == f(2));         // T^2 = -1
  CHECK(t.inv() == (2 * t));
  FieldElement a = f.one() + t;
  CHECK((a * a) == (2 * t));  // (1+T)^2 = 2T
}

TEST_CASE("rational field is exact") {
  Field f = Field::make(FieldSpec::rationals());
  CHECK(f.characteristic() == 0);
  CHECK(!f.is_finite());
  FieldElement third = f.one() / f(3);
  FieldElement sixth = f.one() / f(6);
  CHECK((third + sixth).str() == "1/2");
  CHECK(f.parse_element("2/4").str() == "1/2");
  CHECK(f.parse_element("-3/6").str() == "-1/2");
  CHECK((f.parse_element("2/3") * f.parse_element("9/4")).str() == "3/2");
  CHECK(f.parse_element("2/3").inv().str() == "3/2");
  // no overflow: (10^20)^2
  FieldElement big = f.parse_element("100000000000000000000");
  CHECK((big * big).str() == "10000000000000000000000000000000000000000");
}

TEST_CASE("element enumeration is ascending index") {
  Field f = Field::parse("q(3^2)");
  auto all = f.elements();
  REQUIRE(all.size() == 9);
  for (std::uint64_t i = 0; i < 9; ++i) {
    CHECK(f.index(all[i]) == i);
    CHECK(all[i] == f.element(i));
  }
  // index is the base-p value of the coefficient vector
  CHECK(f.element(5).str() == "[2,1]");
  CHECK(f.element(7) == f.parse_element("[1,2]"));
}

TEST_CASE("element literals") {
  Field f5 = Field::parse("q(5)");
  CHECK(f5.parse_element("12") == f5(2));
  CHECK(f5.parse_element("-1") == f5(4));
  CHECK(f5.parse_element(" 3 ") == f5(3));

  Field f4 = Field::parse("q(2^2)");
  CHECK(f4.parse_element("1,1") == f4.element(3));
  CHECK(f4.parse_element("[1,1]") == f4.element(3));
  CHECK(f4.parse_element("3") == f4.element(3));  // integer index mod q
  CHECK(f4.parse_element("7") == f4.element(3));
  CHECK(f4.element(3).str() == "[1,1]");

  CHECK_THROWS_AS(f5.parse_element("abc"), ParseError);
  CHECK_THROWS_AS(f5.parse_element(""), ParseError);
  CHECK_THROWS_AS(f5.parse_element("1,2"), ParseError);
  CHECK_THROWS_AS(f4.parse_element("1,1,1"), ParseError);
  CHECK_THROWS_AS(f4.parse_element("[1,1"), ParseError);
  Field fr = Field::parse("rational");
  CHECK_THROWS_AS(fr.parse_element("1/0"), ParseError);
}

TEST_CASE("str round-trips through parse_element") {
  for (const char* spec : {"q(7)", "q(2^4)", "q(3^2)"}) {
    Field f = Field::parse(spec);
    for (const FieldElement& a : f.elements())
      CHECK(f.parse_element(a.str()) == a);
  }
  Field fr = Field::parse("rational");
  for (const char* lit : {"0", "-7", "22/7", "-100/3"}) {
    FieldElement a = fr.parse_element(lit);
    CHECK(fr.parse_element(a.str()) == a);
  }
}

TEST_CASE("field specs parse and intern") {
  CHECK(Field::parse("q(7)") == Field::make(FieldSpec::prime_field(7)));
  CHECK(Field::parse("q(2^4)") ==
        Field::make(FieldSpec::extension_field(2, 4)));
  CHECK(Field::parse("q(3^2,m=1,0,1)") == Field::parse("q(3^2)"));
  CHECK(Field::parse("rational") == Field::make(FieldSpec::rationals()));
  CHECK(Field::parse("q(7)") != Field::parse("q(5)"));
  CHECK(Field::parse("q(7)").str() == "q(7)");
  CHECK(Field::parse("q(2^4)").str() == "q(2^4)");
  CHECK(Field::parse("rational").str() == "rational");
  // distinct moduli give distinct fields
  CHECK(Field::parse("q(3^2,m=2,2,1)") != Field::parse("q(3^2)"));
  CHECK_THROWS_AS(Field::parse("gf(7)"), ParseError);
  CHECK_THROWS_AS(Field::parse("q(7"), ParseError);
  CHECK_THROWS_AS(Field::parse("q(0)"), ParseError);
}

TEST_CASE("invalid field specs are rejected with precise errors") {
  CHECK_THROWS_AS(Field::make(FieldSpec::prime_field(6)), NonPrimeModulus);
  CHECK_THROWS_AS(Field::make(FieldSpec::prime_field(1)), NonPrimeModulus);
  CHECK_THROWS_AS(Field::make(FieldSpec::prime_field((1ull << 31) + 11)),
                  NonPrimeModulus);
  CHECK_THROWS_AS(Field::make(FieldSpec::extension_field(2, 0, {1, 1})),
                  DegreeOutOfRange);
  CHECK_THROWS_AS(Field::make(FieldSpec::extension_field(2, 17)),
                  DegreeOutOfRange);
  // no built-in modulus for (5, 2)
  CHECK_THROWS_AS(Field::make(FieldSpec::extension_field(5, 2)),
                  InvalidFieldSpec);
  // wrong coefficient count
  CHECK_THROWS_AS(Field::make(FieldSpec::extension_field(2, 2, {1, 1, 1, 1})),
                  InvalidFieldSpec);
  // not monic
  CHECK_THROWS_AS(Field::make(FieldSpec::extension_field(3, 2, {1, 1, 2})),
                  InvalidFieldSpec);
  // T^2 + 1 = (T + 1)^2 over GF(2)
  CHECK_THROWS_AS(Field::make(FieldSpec::extension_field(2, 2, {1, 0, 1})),
                  ReducibleModulus);
  // order 65537^4 > 2^62
  CHECK_THROWS_AS(
      Field::make(FieldSpec::extension_field(65537, 4, {1, 0, 0, 0, 1})),
      InvalidFieldSpec);
}

TEST_CASE("infinite-field operations are rejected on the rationals") {
  Field f = Field::parse("rational");
  CHECK_THROWS_AS(f.order(), InfiniteField);
  CHECK_THROWS_AS(f.elements(), InfiniteField);
  CHECK_THROWS_AS(f.element(0), InfiniteField);
  CHECK_THROWS_AS(f.index(f.one()), InfiniteField);
}

TEST_CASE("division by zero and field mixing") {
  Field f5 = Field::parse("q(5)");
  Field f7 = Field::parse("q(7)");
  CHECK_THROWS_AS(f5.zero().inv(), DivisionByZero);
  CHECK_THROWS_AS(Field::parse("rational").zero().inv(), DivisionByZero);
  CHECK_THROWS_AS(f5.one() + f7.one(), FieldMismatch);
  CHECK_THROWS_AS(f5.index(f7.one()), FieldMismatch);
}

TEST_CASE("from_mpz reduces big integers") {
  Field f = Field::parse("q(97)");
  mpz_class big("123456789012345678901234567890");
  CHECK(f.from_mpz(big) == f.from_mpz(big % 97));
  CHECK(f.from_mpz(mpz_class(-1)) == f(96));
  Field fr = Field::parse("rational");
  CHECK(fr.from_mpz(big).str() == "123456789012345678901234567890");
}
