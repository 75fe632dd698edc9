#pragma once

#include <array>

#include "dendrikit/deformation.hpp"
#include "dendrikit/flag.hpp"

/// Built-in regression fixtures: the classified bimodules, flag-datum
/// families with their classifying witnesses and representatives, matched
/// pairs, and deformation data, all over the 1-dimensional base algebra exD.
/// Everything is parameterized by the working field so the same data drives
/// both rational verification and finite-field classification.
namespace dendrikit::fixtures {

/// The eight 1-dimensional bimodule action tuples (l1, l2, r1, r2) over exD.
const std::vector<std::array<long, 4>>& bimodule_rows();
DendriformBimodule bimodule_row(const FieldSpec& f, const std::array<long, 4>& row);

/// Flag datum from a 12-tuple (l1,l2,r1,r2,p1,p2,q1,q2,a1,a2,k1,k2) over exD.
FlagDatum flag_from_tuple(const FieldSpec& f, const std::array<Scalar, 12>& t);
FlagDatum flag_from_ints(const FieldSpec& f, const std::array<long, 12>& t);

struct FlagFamilyCase {
  int id = 0;            // 1..16
  int nparams = 1;       // free parameters (u, and v when 2)
  bool u_nonzero = false;
  bool v_nonzero = false;
};

const std::vector<FlagFamilyCase>& flag_family_cases();

/// The family member at parameters (u, v); v is ignored for 1-parameter
/// cases.
FlagDatum flag_family(const FieldSpec& f, int id, const Scalar& u, const Scalar& v);

/// The classifying witness of the family (full equivalence). Case 7's
/// witness needs sqrt(u); nullopt when the field has none.
std::optional<FlagWitness> flag_family_witness(const FieldSpec& f, int id, const Scalar& u,
                                               const Scalar& v);
/// The h0 = 1 witness row.
FlagWitness flag_family_cohom_witness(const FieldSpec& f, int id, const Scalar& u,
                                      const Scalar& v);

/// Orbit representatives: the full-equivalence one is a constant tuple, the
/// cohomologous one may keep free parameters.
FlagDatum flag_family_equiv_rep(const FieldSpec& f, int id);
FlagDatum flag_family_cohom_rep(const FieldSpec& f, int id, const Scalar& u, const Scalar& v);

/// Matched pairs of exD with a 1-dimensional partner: the action rows
/// (l1,l2,r1,r2,p1,p2,q1,q2) paired with V = exD (k = (1,0)) or V = exB
/// (k = (0,1)).
const std::vector<std::array<long, 8>>& matched_pair_rows_exd();
const std::vector<std::array<long, 8>>& matched_pair_rows_exb();
ExtendingDatum matched_pair_datum(const FieldSpec& f, const std::array<long, 8>& actions,
                                  bool v_is_exd);

/// The 1-dimensional cocycle semidirect system over exD (identity-like
/// actions, a nontrivial cocycle and e2 >v e2 = 2 e2).
ExtendingDatum cocycle_example(const FieldSpec& f);

/// Deformation expectations for a flag family case.
struct DeformationExpectation {
  std::vector<Scalar> ds;  // the listed deformation values
  struct EquivCheck {
    Scalar d, dprime, delta;
  };
  std::vector<EquivCheck> equiv_checks;
  int expected_index = 0;
  /// Case 7 over the rationals when sqrt(u) does not exist: the listed
  /// deformation values require a field extension.
  bool requires_field_extension = false;
};

DeformationExpectation deformation_case(const FieldSpec& f, int id, const Scalar& u,
                                        const Scalar& v);

}  // namespace dendrikit::fixtures
