// Acceptance suite: the classified tables and structure theorems reproduced
// end to end, every comparison exact. Prints one line per criterion and
// exits nonzero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <dendrikit/dendrikit.hpp>

#include "generators.hpp"
#include "oracles.hpp"

using namespace dendrikit;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

struct Criterion {
  std::string name;
  std::function<void(std::ostream&)> body;  // throws or streams failures
};

int failures = 0;

void require(std::ostream& log, bool ok, const std::string& what) {
  if (!ok) log << "    failed: " << what << '\n';
}

bool run_criterion(int number, const Criterion& criterion) {
  std::ostringstream log;
  bool threw = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    criterion.body(log);
  } catch (const std::exception& e) {
    threw = true;
    log << "    exception: " << e.what() << '\n';
  }
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
          .count();
  const bool ok = !threw && log.str().empty();
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << criterion.name
            << " (" << ms << " ms)\n";
  if (!ok) {
    std::cout << log.str();
    ++failures;
  }
  return ok;
}

// ---- criterion 1: axiom fixtures -------------------------------------------

void axiom_fixtures(std::ostream& log) {
  for (const auto& [name, alg] : {std::pair<std::string, DendriformAlgebra>{"exD", example_d(kQ)},
                                  {"exB", example_b(kQ)},
                                  {"exE", example_e(kQ)}}) {
    require(log, check_dendriform(alg).ok(), name + " axioms");
    for (auto kind : {InducedKind::Associative, InducedKind::PreLie, InducedKind::Lie})
      require(log, check_induced(induce(alg, kind)).ok(),
              name + " induced " + induced_kind_name(kind));
  }
}

// ---- criterion 2: bimodule table and enumeration ---------------------------

void bimodule_table(std::ostream& log) {
  for (const auto& row : fixtures::bimodule_rows())
    require(log, check_bimodule(fixtures::bimodule_row(kQ, row)).ok(), "row over Q");
  for (long p : {2L, 3L}) {
    const FieldSpec f = FieldSpec::gf(static_cast<unsigned>(p));
    const auto found = enumerate_bimodules(example_d(f), 1, f);
    const auto expected = oracle::bimodule_tuples(1, 0, {p});
    require(log, found.size() == expected.size(),
            "GF(" + std::to_string(p) + ") count " + std::to_string(found.size()) + " vs oracle " +
                std::to_string(expected.size()));
    std::vector<std::array<long, 4>> got;
    for (const auto& m : found)
      got.push_back({m.tr1.c(0, 0, 0).residue(), m.tr2.c(0, 0, 0).residue(),
                     m.tl1.c(0, 0, 0).residue(), m.tl2.c(0, 0, 0).residue()});
    std::sort(got.begin(), got.end());
    auto sorted = expected;
    std::sort(sorted.begin(), sorted.end());
    require(log, got == sorted, "GF(" + std::to_string(p) + ") solution sets agree");
  }
}

// ---- criterion 3: flag families, witnesses, orbit partition ----------------

void flag_table(std::ostream& log) {
  const Scalar one = Scalar::one(kQ);
  for (const auto& cs : fixtures::flag_family_cases()) {
    const std::string tag = "case " + std::to_string(cs.id);
    const FlagDatum fd = fixtures::flag_family(kQ, cs.id, one, one);
    require(log, validate_flag(fd).ok(), tag + " valid");
    const auto witness = fixtures::flag_family_witness(kQ, cs.id, one, one);
    require(log, witness.has_value(), tag + " witness exists at parameter 1");
    if (witness)
      require(log, flag_act(fd, *witness) == fixtures::flag_family_equiv_rep(kQ, cs.id),
              tag + " witness reaches the representative");
    require(log,
            flag_act(fd, fixtures::flag_family_cohom_witness(kQ, cs.id, one, one)) ==
                fixtures::flag_family_cohom_rep(kQ, cs.id, one, one),
            tag + " unit witness reaches the cohomologous representative");
  }

  // Exhaustive classification over GF(3) against the extension-route oracle.
  const FieldSpec g3 = FieldSpec::gf(3);
  const FlagOrbits mine = classify_flags(example_d(g3), g3);
  const auto expected = oracle::valid_tuples(1, 0, {3});
  require(log, mine.valid.size() == expected.size(), "GF(3) valid counts agree");
  const auto oracle_orbits = oracle::orbits(expected, 1, 0, {3});
  require(log, oracle_orbits.classes.size() == mine.equiv_reps.size(),
          "GF(3) orbit counts agree");
  std::map<std::array<long, 12>, int> oracle_class;
  for (size_t c = 0; c < oracle_orbits.classes.size(); ++c)
    for (int member : oracle_orbits.classes[c])
      oracle_class[expected[member]] = static_cast<int>(c);
  bool partitions_agree = mine.valid.size() == expected.size();
  for (size_t i = 0; partitions_agree && i < mine.valid.size(); ++i) {
    std::array<long, 12> ti{};
    const auto tuple_i = mine.valid[i].tuple();
    for (int k = 0; k < 12; ++k) ti[k] = tuple_i[k].residue();
    for (size_t j = i + 1; j < mine.valid.size(); ++j) {
      std::array<long, 12> tj{};
      const auto tuple_j = mine.valid[j].tuple();
      for (int k = 0; k < 12; ++k) tj[k] = tuple_j[k].residue();
      const bool same_mine = mine.equiv_class[i] == mine.equiv_class[j];
      const bool same_oracle = oracle_class.at(ti) == oracle_class.at(tj);
      if (same_mine != same_oracle) partitions_agree = false;
    }
  }
  require(log, partitions_agree, "GF(3) orbit partitions identical");

  // Distinct representatives, reduced mod 3, stay in distinct orbits.
  std::vector<int> rep_orbit;
  for (const auto& cs : fixtures::flag_family_cases()) {
    const int idx = mine.find(fixtures::flag_family_equiv_rep(g3, cs.id));
    require(log, idx >= 0, "representative of case " + std::to_string(cs.id) + " enumerated");
    rep_orbit.push_back(idx >= 0 ? mine.equiv_class[idx] : -1);
  }
  for (size_t i = 0; i < rep_orbit.size(); ++i)
    for (size_t j = i + 1; j < rep_orbit.size(); ++j)
      require(log, rep_orbit[i] != rep_orbit[j],
              "cases " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                  " in distinct orbits");
}

// ---- criterion 4: matched pairs ---------------------------------------------

void matched_pair_tables(std::ostream& log) {
  auto check_rows = [&](const std::vector<std::array<long, 8>>& rows, bool v_is_exd,
                        const std::string& tag) {
    for (size_t i = 0; i < rows.size(); ++i) {
      const ExtendingDatum mp = fixtures::matched_pair_datum(kQ, rows[i], v_is_exd);
      const std::string row_tag = tag + " row " + std::to_string(i + 1);
      require(log, validate_matched_pair(mp).ok(), row_tag + " is a matched pair");
      const ProductAlgebra product = bicrossed_product(mp);
      require(log, check_dendriform(product.algebra).ok(), row_tag + " bicrossed product");
      const auto refound = detect_factorization(rebuild_extension(mp));
      require(log, refound.has_value() && *refound == mp, row_tag + " factorization recovered");
    }
  };
  check_rows(fixtures::matched_pair_rows_exd(), true, "first partner table");
  check_rows(fixtures::matched_pair_rows_exb(), false, "second partner table");
}

// ---- criterion 5: deformation table -----------------------------------------

void deformation_table(std::ostream& log) {
  const FieldSpec g3 = FieldSpec::gf(3);
  for (const auto& cs : fixtures::flag_family_cases()) {
    const std::string tag = "case " + std::to_string(cs.id);
    const Scalar one = Scalar::one(kQ);
    const ExtendingDatum w = flag_to_datum(fixtures::flag_family(kQ, cs.id, one, one));
    const auto expect = fixtures::deformation_case(kQ, cs.id, one, one);
    require(log, !expect.requires_field_extension, tag + " instantiable at parameter 1 over Q");
    for (const auto& value : expect.ds) {
      LinMap d(kQ, 1, 1);
      d.at(0, 0) = value;
      require(log, validate_deformation(w, d).ok(), tag + " d = " + value.str());
    }
    for (const auto& ec : expect.equiv_checks) {
      LinMap d(kQ, 1, 1), dp(kQ, 1, 1), delta(kQ, 1, 1);
      d.at(0, 0) = ec.d;
      dp.at(0, 0) = ec.dprime;
      delta.at(0, 0) = ec.delta;
      require(log, check_deformation_equivalence(w, d, dp, delta).ok(),
              tag + " delta witness verifies");
    }
    const Scalar one3 = Scalar::one(g3);
    const Extension ext3 = flag_to_extension(fixtures::flag_family(g3, cs.id, one3, one3));
    const auto classes = enumerate_complements(ext3, g3);
    const auto expect3 = fixtures::deformation_case(g3, cs.id, one3, one3);
    require(log, classes.index == expect3.expected_index,
            tag + " index " + std::to_string(classes.index) + " over GF(3), want " +
                std::to_string(expect3.expected_index));
  }
}

// ---- criterion 6: bijection round trips --------------------------------------

void bijection_round_trips(std::ostream& log) {
  std::mt19937_64 rng(20240811);
  const auto& pool11 = gen::valid_11();
  const auto& pool21 = gen::valid_21();
  std::uniform_int_distribution<size_t> pick11(0, pool11.size() - 1);
  std::uniform_int_distribution<size_t> pick21(0, pool21.size() - 1);
  int clean = 0;
  for (int round = 0; round < 200; ++round) {
    const ExtendingDatum& w = round % 2 ? pool21[pick21(rng)] : pool11[pick11(rng)];
    const Extension ext = rebuild_extension(w);
    if (extract_datum(ext) == w && rebuild_extension(extract_datum(ext)).total == ext.total)
      ++clean;
  }
  require(log, clean == 200, "datum <-> extension round trips: " + std::to_string(clean) + "/200");

  for (unsigned p : {2u, 3u}) {
    const FieldSpec f = FieldSpec::gf(p);
    int trips = 0, total = 0;
    for (const auto& cs : fixtures::flag_family_cases()) {
      Extension ext = make_extension(direct_sum(example_d(f), example_b(f)), 1);
      try {
        ext = flag_to_extension(fixtures::flag_family(f, cs.id, Scalar::one(f), Scalar::one(f)));
      } catch (const DivisionByZero&) {
        continue;  // family not instantiable over this field
      }
      for (const auto& d : enumerate_complements(ext, f).deformations) {
        ++total;
        const Complement comp = deformation_to_complement(ext, d);
        if (complement_to_deformation(ext, comp) == d) ++trips;
      }
    }
    require(log, total > 0 && trips == total,
            "complement <-> deformation round trips over GF(" + std::to_string(p) + "): " +
                std::to_string(trips) + "/" + std::to_string(total));
  }
}

// ---- criterion 7: theorem biconditional --------------------------------------

void theorem_biconditional(std::ostream& log) {
  std::mt19937_64 rng(1618);
  const FieldSpec g3 = FieldSpec::gf(3);
  const DendriformAlgebra d1 = example_d(g3);
  const DendriformAlgebra d2 = example_e(g3);
  const auto& pool11 = gen::valid_11();
  std::uniform_int_distribution<size_t> pick11(0, pool11.size() - 1);
  int mismatches = 0, valid_seen = 0, invalid_seen = 0;
  for (int round = 0; round < 200; ++round) {
    ExtendingDatum w(d1, 1);
    if (round < 80) {
      w = gen::random_tuple(rng, d1, 1);
    } else if (round < 120) {
      w = gen::random_tuple(rng, d2, 1);
    } else if (round < 160) {
      w = pool11[pick11(rng)];
    } else {
      w = gen::perturb(rng, pool11[pick11(rng)]);
    }
    const bool datum_ok = validate_datum(w).ok();
    const bool product_ok = check_dendriform(unified_product_raw(w)).ok();
    if (datum_ok != product_ok) ++mismatches;
    (datum_ok ? valid_seen : invalid_seen)++;
  }
  require(log, mismatches == 0, std::to_string(mismatches) + " biconditional mismatches");
  require(log, valid_seen > 0 && invalid_seen > 0,
          "sample covers both outcomes (valid " + std::to_string(valid_seen) + ", invalid " +
              std::to_string(invalid_seen) + ")");
}

// ---- criterion 8: functor commutation ----------------------------------------

void functor_commutation(std::ostream& log) {
  std::vector<std::pair<std::string, ExtendingDatum>> datums;
  const Scalar one = Scalar::one(kQ);
  for (const auto& cs : fixtures::flag_family_cases())
    datums.emplace_back("flag case " + std::to_string(cs.id),
                        flag_to_datum(fixtures::flag_family(kQ, cs.id, one, one)));
  int row = 0;
  for (const auto& r : fixtures::matched_pair_rows_exd())
    datums.emplace_back("matched pair " + std::to_string(++row),
                        fixtures::matched_pair_datum(kQ, r, true));
  for (const auto& r : fixtures::matched_pair_rows_exb())
    datums.emplace_back("matched pair " + std::to_string(++row),
                        fixtures::matched_pair_datum(kQ, r, false));
  datums.emplace_back("cocycle system", fixtures::cocycle_example(kQ));
  for (const auto& r : fixtures::bimodule_rows())
    datums.emplace_back("abelian semidirect", datum_from_bimodule(fixtures::bimodule_row(kQ, r)));
  datums.emplace_back("direct sum", datum_from_algebras(example_d(kQ), example_b(kQ)));

  for (const auto& [name, w] : datums) {
    const ProductAlgebra product = unified_product(w);
    for (auto kind : {InducedKind::Associative, InducedKind::PreLie, InducedKind::Lie}) {
      const InducedAlgebra from_product = induce(product.algebra, kind);
      const InducedAlgebra from_datum = induced_unified_product(induce_datum(w, kind));
      require(log, from_product.product == from_datum.product,
              name + ": " + induced_kind_name(kind) + " products agree entrywise");
    }
  }
}

// ---- criterion 9: splitting counterexample ------------------------------------

void splitting_counterexample(std::ostream& log) {
  // The family-14 member at (0, 1).
  const Extension ext =
      flag_to_extension(fixtures::flag_family(kQ, 14, Scalar::zero(kQ), Scalar::one(kQ)));
  const AlgebraSeq seq = algebra_seq_of_extension(ext);
  require(log, check_algebra_seq(seq).ok(), "sequence well formed");
  LinMap s(kQ, 2, 1);
  s.at(1, 0) = Scalar::one(kQ);
  require(log, check_morphism(s, seq.C, seq.B).ok(), "right splitting is an algebra morphism");
  require(log, seq.pi.compose(s) == LinMap::identity(kQ, 1), "pi s = id");
  require(log, !find_alg_left_splitting(ext).has_value(), "no rational left splitting");
  const FieldSpec g3 = FieldSpec::gf(3);
  const Extension ext3 =
      flag_to_extension(fixtures::flag_family(g3, 14, Scalar::zero(g3), Scalar::one(g3)));
  require(log, !find_alg_left_splitting(ext3).has_value(), "no GF(3) left splitting");

  std::mt19937_64 rng(271828);
  int trips = 0;
  for (int round = 0; round < 50; ++round) {
    const auto split = gen::random_split_bimodule_seq(rng);
    const LinMap section = left_split_to_right(split.seq, split.rho);
    const LinMap back = right_split_to_left(split.seq, section);
    if (back.compose(split.seq.iota) == split.rho.compose(split.seq.iota)) ++trips;
  }
  require(log, trips == 50, "module splitting round trips: " + std::to_string(trips) + "/50");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"named algebras and their induced structures", axiom_fixtures},
      {"one-dimensional bimodules: table rows and exhaustive enumeration", bimodule_table},
      {"flag families: witnesses, representatives and the GF(3) orbit partition", flag_table},
      {"matched pairs: validation, bicrossed products, factorization", matched_pair_tables},
      {"deformation maps: listed values, witnesses and complement indices", deformation_table},
      {"extension and complement bijections round-trip exactly", bijection_round_trips},
      {"datum validity is equivalent to the product being dendriform", theorem_biconditional},
      {"induced structures commute with unified products", functor_commutation},
      {"right splitting without left splitting; module splittings round-trip",
       splitting_counterexample},
  };
  for (size_t i = 0; i < criteria.size(); ++i) run_criterion(static_cast<int>(i + 1), criteria[i]);
  if (failures == 0) {
    std::cout << "all " << criteria.size() << " acceptance criteria passed\n";
    return 0;
  }
  std::cout << failures << " acceptance criteria failed\n";
  return 1;
}
