#include <doctest.h>

#include <dendrikit/dendriform.hpp>
#include <dendrikit/fixtures.hpp>

using namespace dendrikit;

namespace {
const FieldSpec kQ = FieldSpec::rationals();
}

TEST_CASE("the named algebras satisfy the axioms") {
  CHECK(check_dendriform(example_d(kQ)).ok());
  CHECK(check_dendriform(example_b(kQ)).ok());
  CHECK(check_dendriform(example_e(kQ)).ok());
  CHECK(check_dendriform(zero_algebra(kQ, 3)).ok());
}

TEST_CASE("a broken one-dimensional algebra is reported with its triple") {
  DendriformAlgebra bad(kQ, 1);
  bad.succ.c(0, 0, 0) = Scalar::one(kQ);
  bad.prec.c(0, 0, 0) = Scalar::one(kQ);
  const auto report = check_dendriform(bad);
  REQUIRE_FALSE(report.ok());
  CHECK(report.mentions("axiom (1)"));
  bool found = false;
  for (const auto& v : report.violations())
    if (v.condition == "axiom (1)" && v.where == std::vector<int>{0, 0, 0}) {
      found = true;
      CHECK(v.lhs == "[2]");
      CHECK(v.rhs == "[1]");
    }
  CHECK(found);
}

TEST_CASE("induced products") {
  const DendriformAlgebra d = example_d(kQ);
  CHECK(induce(d, InducedKind::Associative).product.at(0, 0) == Vec::unit(kQ, 1, 0));
  CHECK(induce(d, InducedKind::PreLie).product.at(0, 0) == Vec::unit(kQ, 1, 0));
  CHECK(induce(d, InducedKind::Lie).product.at(0, 0).is_zero());

  DendriformAlgebra bad(kQ, 1);
  bad.succ.c(0, 0, 0) = Scalar::one(kQ);
  bad.prec.c(0, 0, 0) = Scalar::one(kQ);
  CHECK_THROWS_AS(induce(bad, InducedKind::Lie), InvalidInput);
}

TEST_CASE("induced algebras pass their own axiom suites") {
  for (const auto& alg : {example_d(kQ), example_b(kQ), example_e(kQ)})
    for (auto kind : {InducedKind::Associative, InducedKind::PreLie, InducedKind::Lie})
      CHECK(check_induced(induce(alg, kind)).ok());
}

TEST_CASE("the two routes to the Lie bracket agree") {
  for (const auto& alg : {example_d(kQ), example_b(kQ), example_e(kQ)}) {
    const BilinearMap via_star = induce(alg, InducedKind::Lie).product;
    const BilinearMap diamond = induce(alg, InducedKind::PreLie).product;
    CHECK(via_star == diamond - diamond.flipped());
  }
}

TEST_CASE("morphism checks") {
  const DendriformAlgebra d = example_d(kQ);
  const auto id_report = check_morphism(LinMap::identity(kQ, 1), d, d);
  CHECK(id_report.ok());
  CHECK(id_report.isomorphism);

  const auto zero_report = check_morphism(LinMap(kQ, 1, 1), d, d);
  CHECK(zero_report.ok());
  CHECK_FALSE(zero_report.isomorphism);

  // The classified pair: the constant representative maps onto the
  // one-parameter member by e2 -> -e1 + e2.
  const FlagDatum rep = fixtures::flag_family_equiv_rep(kQ, 1);
  const FlagDatum member = fixtures::flag_family(kQ, 1, Scalar::one(kQ), Scalar::zero(kQ));
  const DendriformAlgebra rep_ext = flag_to_extension(rep).total;
  const DendriformAlgebra member_ext = flag_to_extension(member).total;
  LinMap psi = LinMap::identity(kQ, 2);
  psi.at(0, 1) = Scalar::of(kQ, -1);
  const auto rep_to_member = check_morphism(psi, rep_ext, member_ext);
  CHECK(rep_to_member.ok());
  CHECK(rep_to_member.isomorphism);
}

TEST_CASE("morphisms compose") {
  // rep -> member(u) by e2 -> -u e1 + e2 within one family; composing
  // member(1) -> rep -> member(2) again intertwines the products.
  const DendriformAlgebra rep = flag_to_extension(fixtures::flag_family_equiv_rep(kQ, 1)).total;
  auto member = [&](long u) {
    return flag_to_extension(fixtures::flag_family(kQ, 1, Scalar::of(kQ, u), Scalar::zero(kQ)))
        .total;
  };
  auto psi = [&](long u) {
    LinMap m = LinMap::identity(kQ, 2);
    m.at(0, 1) = Scalar::of(kQ, -u);
    return m;
  };
  REQUIRE(check_morphism(psi(1), rep, member(1)).ok());
  REQUIRE(check_morphism(psi(2), rep, member(2)).ok());
  const LinMap one_to_two = psi(2).compose(psi(1).inverse());
  CHECK(check_morphism(one_to_two, member(1), member(2)).ok());
}

TEST_CASE("direct sums") {
  const DendriformAlgebra d = example_d(kQ);
  const DendriformAlgebra b = example_b(kQ);
  const DendriformAlgebra sum = direct_sum(d, b);
  CHECK(sum.dim == 2);
  CHECK(check_dendriform(sum).ok());
  // (0,e2) < (0,e2) = (0,e2); all mixed products vanish.
  CHECK(sum.prec.at(1, 1) == Vec::unit(kQ, 2, 1));
  CHECK(sum.succ.at(0, 1).is_zero());
  CHECK(sum.prec.at(1, 0).is_zero());
  CHECK(sum.succ.at(1, 1).is_zero());

  const DendriformAlgebra with_zero = direct_sum(example_e(kQ), zero_algebra(kQ, 1));
  CHECK(with_zero.dim == 3);
  CHECK(with_zero.succ.at(0, 2).is_zero());
  CHECK(with_zero.prec.at(2, 1).is_zero());
}

TEST_CASE("subalgebra restriction") {
  const DendriformAlgebra e = example_e(kQ);
  LinMap span_e1(kQ, 2, 1);
  span_e1.at(0, 0) = Scalar::one(kQ);
  const DendriformAlgebra d = subalgebra_on(e, span_e1);
  CHECK(d == example_d(kQ));

  LinMap not_closed(kQ, 2, 1);
  not_closed.at(1, 0) = Scalar::one(kQ);  // span(e2) is not closed in exE
  CHECK_THROWS_AS(subalgebra_on(e, not_closed), InvalidInput);
}

TEST_CASE("fixture lookup") {
  CHECK(named_algebra("exD", kQ).has_value());
  CHECK(named_algebra("exB", kQ).has_value());
  CHECK(named_algebra("exE", kQ).has_value());
  CHECK_FALSE(named_algebra("nope", kQ).has_value());
}
