#include <doctest.h>

#include <dendrikit/fixtures.hpp>

#include "generators.hpp"
#include "oracles.hpp"

using namespace dendrikit;

namespace {
const FieldSpec kQ = FieldSpec::rationals();

ExtendingDatum family_datum(const FieldSpec& f, int id, long u, long v) {
  return flag_to_datum(fixtures::flag_family(f, id, Scalar::of(f, u), Scalar::of(f, v)));
}

LinMap dmap(const FieldSpec& f, const Scalar& value) {
  LinMap d(f, 1, 1);
  d.at(0, 0) = value;
  return d;
}
}  // namespace

TEST_CASE("deformation validation") {
  // Family 1 at parameter 1 admits exactly d = -1.
  const ExtendingDatum w1 = family_datum(kQ, 1, 1, 0);
  CHECK(validate_deformation(w1, dmap(kQ, Scalar::of(kQ, -1))).ok());
  CHECK_FALSE(validate_deformation(w1, dmap(kQ, Scalar::zero(kQ))).ok());

  // A datum with zero actions and zero cocycles accepts d = 0.
  const ExtendingDatum sum = datum_from_algebras(example_d(kQ), example_b(kQ));
  CHECK(validate_deformation(sum, dmap(kQ, Scalar::zero(kQ))).ok());

  CHECK_THROWS_AS(validate_deformation(w1, LinMap(kQ, 2, 1)), DimMismatch);
  ExtendingDatum invalid = w1;
  invalid.f1.c(0, 0, 0) = Scalar::of(kQ, 5);
  CHECK_THROWS_AS(validate_deformation(invalid, dmap(kQ, Scalar::zero(kQ))), InvalidDatum);
}

TEST_CASE("the deformed algebra") {
  // Family 3 at parameter 1 with d = -1: the succ product on V collapses.
  const ExtendingDatum w3 = family_datum(kQ, 3, 1, 0);
  const DendriformAlgebra vd = deform(w3, dmap(kQ, Scalar::of(kQ, -1)));
  CHECK(vd.succ.is_zero());
  CHECK(check_dendriform(vd).ok());

  // d = 0 returns (V, sv, pv) itself.
  const DendriformAlgebra unchanged = deform(w3, dmap(kQ, Scalar::zero(kQ)));
  CHECK(unchanged.succ == w3.sv);
  CHECK(unchanged.prec == w3.pv);

  // Family 12 at parameter 1 with d = -1.
  const ExtendingDatum w12 = family_datum(kQ, 12, 1, 0);
  CHECK(check_dendriform(deform(w12, dmap(kQ, Scalar::of(kQ, -1)))).ok());

  // Family 12 admits only d = -1.
  CHECK_THROWS_AS(deform(w12, dmap(kQ, Scalar::of(kQ, 7))), InvalidDeformation);
}

TEST_CASE("complement to deformation") {
  // The V-block of a bicrossed product pulls back to d = 0.
  const ExtendingDatum mp =
      fixtures::matched_pair_datum(kQ, fixtures::matched_pair_rows_exd()[1], true);
  const Extension ext = rebuild_extension(mp);
  Complement vblock{LinMap(kQ, 2, 1)};
  vblock.basis.at(1, 0) = Scalar::one(kQ);
  CHECK(complement_to_deformation(ext, vblock).is_zero());

  // Family 3: the span of e2 - e1 pulls back to d(e2) = -e1.
  const Extension ext3 = rebuild_extension(family_datum(kQ, 3, 1, 0));
  Complement shifted{LinMap(kQ, 2, 1)};
  shifted.basis.at(0, 0) = Scalar::of(kQ, -1);
  shifted.basis.at(1, 0) = Scalar::one(kQ);
  CHECK(complement_to_deformation(ext3, shifted) == dmap(kQ, Scalar::of(kQ, -1)));

  // In family 1 only the span of e2 - e1 is a complement; any other span
  // fails closure.
  const Extension ext1 = rebuild_extension(family_datum(kQ, 1, 1, 0));
  Complement open{LinMap(kQ, 2, 1)};
  open.basis.at(0, 0) = Scalar::of(kQ, 5);
  open.basis.at(1, 0) = Scalar::one(kQ);
  CHECK_THROWS_AS(complement_to_deformation(ext1, open), NotAComplement);
}

TEST_CASE("deformation to complement") {
  const Extension ext = rebuild_extension(family_datum(kQ, 1, 1, 0));
  // d = -1: the complement is spanned by e2 - e1.
  const Complement comp = deformation_to_complement(ext, dmap(kQ, Scalar::of(kQ, -1)));
  CHECK(comp.basis.at(0, 0) == Scalar::of(kQ, -1));
  CHECK(comp.basis.at(1, 0).is_one());

  const ExtendingDatum sum = datum_from_algebras(example_d(kQ), example_b(kQ));
  const Complement vblock =
      deformation_to_complement(rebuild_extension(sum), dmap(kQ, Scalar::zero(kQ)));
  CHECK(vblock.basis.at(0, 0).is_zero());
  CHECK(vblock.basis.at(1, 0).is_one());

  CHECK_THROWS_AS(deformation_to_complement(ext, dmap(kQ, Scalar::zero(kQ))),
                  InvalidDeformation);
}

TEST_CASE("round trips on all enumerated deformations") {
  for (unsigned p : {2u, 3u}) {
    const FieldSpec f = FieldSpec::gf(p);
    for (const auto& cs : fixtures::flag_family_cases()) {
      Extension ext = make_extension(direct_sum(example_d(f), example_b(f)), 1);
      try {
        ext = flag_to_extension(
            fixtures::flag_family(f, cs.id, Scalar::one(f), Scalar::one(f)));
      } catch (const DivisionByZero&) {
        continue;  // family not instantiable over this field
      }
      const ExtendingDatum w = extract_datum(ext);
      const auto classes = enumerate_complements(ext, f);
      for (const auto& d : classes.deformations) {
        const Complement comp = deformation_to_complement(ext, d);
        CHECK(complement_to_deformation(ext, comp) == d);
      }
    }
  }
}

TEST_CASE("deformation equivalence") {
  const ExtendingDatum w3 = family_datum(kQ, 3, 1, 0);
  // Reflexive.
  CHECK(check_deformation_equivalence(w3, dmap(kQ, Scalar::of(kQ, -1)),
                                      dmap(kQ, Scalar::of(kQ, -1)), LinMap::identity(kQ, 1))
            .ok());
  // The two classes of family 3 do not merge.
  CHECK_FALSE(check_deformation_equivalence(w3, dmap(kQ, Scalar::of(kQ, -1)),
                                            dmap(kQ, Scalar::zero(kQ)), LinMap::identity(kQ, 1))
                  .ok());
  // Family 7 at (1, 0): d = 1 and d = -1 are exchanged by delta = -1.
  const ExtendingDatum w7 = family_datum(kQ, 7, 1, 0);
  CHECK(check_deformation_equivalence(w7, dmap(kQ, Scalar::one(kQ)),
                                      dmap(kQ, Scalar::of(kQ, -1)), dmap(kQ, Scalar::of(kQ, -1)))
            .ok());
  CHECK_THROWS_AS(check_deformation_equivalence(w3, dmap(kQ, Scalar::one(kQ)),
                                                dmap(kQ, Scalar::one(kQ)), LinMap(kQ, 1, 1)),
                  SingularDelta);
}

TEST_CASE("equivalence is an equivalence relation on the enumerated sets") {
  const FieldSpec& g3 = gen::gf3();
  const Extension ext = flag_to_extension(fixtures::flag_family(g3, 3, Scalar::one(g3), Scalar::one(g3)));
  const ExtendingDatum w = extract_datum(ext);
  const auto classes = enumerate_complements(ext, g3);
  const auto& ds = classes.deformations;
  auto related = [&](int i, int j) {
    for (long delta = 1; delta < 3; ++delta)
      if (check_deformation_equivalence(w, ds[i], ds[j], dmap(g3, Scalar::of(g3, delta))).ok())
        return true;
    return false;
  };
  const int n = static_cast<int>(ds.size());
  for (int i = 0; i < n; ++i) {
    CHECK(related(i, i));
    for (int j = 0; j < n; ++j) {
      CHECK(related(i, j) == related(j, i));
      CHECK(related(i, j) == (classes.cls[i] == classes.cls[j]));
      for (int k = 0; k < n; ++k)
        if (related(i, j) && related(j, k)) CHECK(related(i, k));
    }
  }
}

TEST_CASE("complement classification indices") {
  const FieldSpec& g3 = gen::gf3();
  auto index_of = [&](int id) {
    const Extension ext =
        flag_to_extension(fixtures::flag_family(g3, id, Scalar::one(g3), Scalar::one(g3)));
    return enumerate_complements(ext, g3).index;
  };
  CHECK(index_of(3) == 2);
  CHECK(index_of(12) == 1);

  // Direct sum over GF(2): the independent complement-counting oracle.
  const FieldSpec g2 = FieldSpec::gf(2);
  const Extension sum = make_extension(direct_sum(example_d(g2), example_b(g2)), 1);
  const auto classes = enumerate_complements(sum, g2);
  oracle::Ext2 table{};
  table.succ[0][0][0] = 1;
  table.prec[1][1][1] = 1;
  const auto expected = oracle::complements_of(table, {2});
  CHECK(classes.deformations.size() == expected.complements.size());
  CHECK(classes.index == expected.classes);
  for (size_t i = 0; i < classes.deformations.size(); ++i)
    CHECK(classes.deformations[i].at(0, 0).residue() == expected.complements[i]);

  CHECK_THROWS_AS(enumerate_complements(sum, kQ), InfiniteField);
}

TEST_CASE("every enumerated deformation deforms to a dendriform algebra") {
  for (unsigned p : {2u, 3u}) {
    const FieldSpec f = FieldSpec::gf(p);
    const Extension ext = make_extension(direct_sum(example_d(f), example_b(f)), 1);
    const ExtendingDatum w = extract_datum(ext);
    for (const auto& d : enumerate_complements(ext, f).deformations)
      CHECK(check_dendriform(deform(w, d)).ok());
  }
}

TEST_CASE("x + d(x) embeds the deformed algebra onto the complement") {
  const ExtendingDatum w = family_datum(kQ, 3, 1, 0);
  const Extension ext = rebuild_extension(w);
  const LinMap d = dmap(kQ, Scalar::of(kQ, -1));
  const DendriformAlgebra vd = deform(w, d);
  const Complement comp = deformation_to_complement(ext, d);
  const DendriformAlgebra on_comp = subalgebra_on(ext.total, comp.basis);
  // In the complement's own basis the embedding is the identity map.
  const auto morphism = check_morphism(LinMap::identity(kQ, 1), vd, on_comp);
  CHECK(morphism.ok());
  CHECK(morphism.isomorphism);
}
