#include <doctest.h>

#include <random>

#include <dendrikit/scalar.hpp>

using namespace dendrikit;

TEST_CASE("exact rational arithmetic") {
  const FieldSpec q = FieldSpec::rationals();
  CHECK(Scalar::fraction(q, 1, 2) + Scalar::fraction(q, 1, 3) == Scalar::fraction(q, 5, 6));
  CHECK(Scalar::fraction(q, 4, 6) == Scalar::fraction(q, 2, 3));
  CHECK((Scalar::fraction(q, 4, 6)).str() == "2/3");
  CHECK(Scalar::of(q, -3).str() == "-3");
  CHECK_THROWS_AS(Scalar::one(q) / Scalar::zero(q), DivisionByZero);
  CHECK_THROWS_AS(Scalar::zero(q).inverse(), DivisionByZero);
}

TEST_CASE("prime field arithmetic") {
  const FieldSpec g5 = FieldSpec::gf(5);
  CHECK(Scalar::of(g5, 2) * Scalar::of(g5, 4) == Scalar::of(g5, 3));
  CHECK(Scalar::of(g5, -1) == Scalar::of(g5, 4));
  CHECK((Scalar::of(g5, 2).inverse() * Scalar::of(g5, 2)).is_one());
  CHECK_THROWS_AS(FieldSpec::gf(6), InvalidField);
  CHECK_THROWS_AS(FieldSpec::gf(101), InvalidField);
}

TEST_CASE("field mismatch is a hard error") {
  const Scalar a = Scalar::one(FieldSpec::rationals());
  const Scalar b = Scalar::one(FieldSpec::gf(3));
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK_THROWS_AS(a * b, FieldMismatch);
}

TEST_CASE("parsing") {
  const FieldSpec q = FieldSpec::rationals();
  CHECK(Scalar::parse("4/6", q) == Scalar::fraction(q, 2, 3));
  CHECK(Scalar::parse("-7", q) == Scalar::of(q, -7));
  CHECK(Scalar::parse("7", FieldSpec::gf(5)) == Scalar::of(FieldSpec::gf(5), 2));
  CHECK_THROWS_AS(Scalar::parse("1/0", q), DenominatorZero);
  CHECK_THROWS_AS(Scalar::parse("x", q), ParseError);
  CHECK_THROWS_AS(Scalar::parse("-1", FieldSpec::gf(3)), ParseError);
  CHECK_THROWS_AS(FieldSpec::parse("gf:abc"), ParseError);
  CHECK(FieldSpec::parse("gf:7") == FieldSpec::gf(7));
  CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
}

TEST_CASE("serialize then parse is the identity") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
  const FieldSpec q = FieldSpec::rationals();
  for (int i = 0; i < 200; ++i) {
    const Scalar s = Scalar::fraction(q, num(rng), den(rng));
    CHECK(Scalar::parse(s.str(), q) == s);
  }
  const FieldSpec g7 = FieldSpec::gf(7);
  for (long r = 0; r < 7; ++r) {
    const Scalar s = Scalar::of(g7, r);
    CHECK(Scalar::parse(s.str(), g7) == s);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 20);
  auto check_axioms = [](const Scalar& a, const Scalar& b, const Scalar& c) {
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + (-a)).is_zero());
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
  };
  const FieldSpec q = FieldSpec::rationals();
  for (int i = 0; i < 100; ++i)
    check_axioms(Scalar::fraction(q, num(rng), den(rng)), Scalar::fraction(q, num(rng), den(rng)),
                 Scalar::fraction(q, num(rng), den(rng)));
  const FieldSpec g5 = FieldSpec::gf(5);
  std::uniform_int_distribution<long> res(0, 4);
  for (int i = 0; i < 100; ++i)
    check_axioms(Scalar::of(g5, res(rng)), Scalar::of(g5, res(rng)), Scalar::of(g5, res(rng)));
}

TEST_CASE("field enumeration") {
  const auto two = enumerate_field(FieldSpec::gf(2));
  REQUIRE(two.size() == 2);
  CHECK(two[0].is_zero());
  CHECK(two[1].is_one());
  const auto three = enumerate_field(FieldSpec::gf(3));
  REQUIRE(three.size() == 3);
  CHECK(three[2] == Scalar::of(FieldSpec::gf(3), 2));
  CHECK_THROWS_AS(enumerate_field(FieldSpec::rationals()), InfiniteField);
  CHECK(enumerate_field_units(FieldSpec::gf(5)).size() == 4);
}

TEST_CASE("square roots") {
  const FieldSpec q = FieldSpec::rationals();
  CHECK(Scalar::fraction(q, 9, 4).sqrt() == Scalar::fraction(q, 3, 2));
  CHECK(!Scalar::of(q, 2).sqrt().has_value());
  CHECK(!Scalar::of(q, -1).sqrt().has_value());
  const FieldSpec g7 = FieldSpec::gf(7);
  const auto r = Scalar::of(g7, 2).sqrt();  // 3*3 = 9 = 2 mod 7
  REQUIRE(r.has_value());
  CHECK((*r) * (*r) == Scalar::of(g7, 2));
  CHECK(!Scalar::of(g7, 3).sqrt().has_value());
}
