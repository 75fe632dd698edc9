#pragma once

#include "dendrikit/extension.hpp"

namespace dendrikit {

/// A subalgebra complement of the distinguished block, given by the columns
/// of `basis` inside the total space.
struct Complement {
  LinMap basis;  // dim(total) x vdim
};

/// The two defining identities of a deformation map d: V -> D against the
/// datum, checked on all V-basis pairs. Labels "deformation (>)" and
/// "deformation (<)".
ValidationReport validate_deformation(const ExtendingDatum& w, const LinMap& d);

/// The deformed algebra V_d. InvalidDeformation unless d validates.
DendriformAlgebra deform(const ExtendingDatum& w, const LinMap& d);

/// d = -(retraction associated to the complement) restricted to the V-block;
/// verifies the deformation identities and that x -> x + d(x) is an algebra
/// isomorphism from V_d onto the complement subalgebra.
LinMap complement_to_deformation(const Extension& ext, const Complement& comp);  // NotAComplement

/// The complement spanned by { d(x) + x }; both round trips with
/// complement_to_deformation are revalidated on every call.
Complement deformation_to_complement(const Extension& ext, const LinMap& d);  // InvalidDeformation

/// Equivalence of deformation maps by an automorphism delta of V; passing is
/// cross-checked against delta being an algebra isomorphism V_d -> V_d'.
ValidationReport check_deformation_equivalence(const ExtendingDatum& w, const LinMap& d,
                                               const LinMap& dprime,
                                               const LinMap& delta);  // SingularDelta

struct ComplementClassification {
  std::vector<LinMap> deformations;   // all valid maps, enumeration order
  std::vector<int> cls;               // class id per deformation
  std::vector<int> class_reps;        // index of the lex-min member per class
  std::vector<Complement> complements;
  int index = 0;                      // number of classes: [E:D]
};

/// Enumerates all deformation maps of the extracted datum over a prime
/// field, partitions them by exhaustive delta-search over GL(V), and
/// returns the complements through the bijection. InfiniteField over Q.
ComplementClassification enumerate_complements(const Extension& ext, const FieldSpec& field);

}  // namespace dendrikit
