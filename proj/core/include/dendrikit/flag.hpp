#pragma once

#include <cstdint>
#include <map>

#include "dendrikit/extension.hpp"

namespace dendrikit {

/// Codimension-1 extending data: four functionals, four endomorphisms, two
/// vectors and two scalars over the base algebra.
struct FlagDatum {
  DendriformAlgebra base;
  LinMap l1, l2, r1, r2;  // D -> k, stored as 1 x n
  LinMap p1, p2, q1, q2;  // D -> D
  Vec a1, a2;             // in D
  Scalar k1, k2;

  explicit FlagDatum(DendriformAlgebra alg)
      : base(std::move(alg)),
        l1(base.field, 1, base.dim),
        l2(base.field, 1, base.dim),
        r1(base.field, 1, base.dim),
        r2(base.field, 1, base.dim),
        p1(base.field, base.dim, base.dim),
        p2(base.field, base.dim, base.dim),
        q1(base.field, base.dim, base.dim),
        q2(base.field, base.dim, base.dim),
        a1(base.field, base.dim),
        a2(base.field, base.dim),
        k1(Scalar::zero(base.field)),
        k2(Scalar::zero(base.field)) {}

  /// Serialized parameter tuple in the order (l1,l2,r1,r2,p1,p2,q1,q2,a1,a2,k1,k2);
  /// for a 1-dimensional base this is the familiar 12-tuple.
  std::vector<Scalar> tuple() const;
  bool operator==(const FlagDatum& o) const { return tuple() == o.tuple() && base == o.base; }
};

/// Conditions (F1)-(F12), exhaustively over the base. Labels "(Fk) line j".
ValidationReport validate_flag(const FlagDatum& fd);

/// The vdim-1 extending datum a flag tuple defines. Total on raw tuples.
ExtendingDatum flag_to_datum(const FlagDatum& fd);

/// Coordinate read-off; inverse of flag_to_datum. WrongVDim unless vdim = 1.
FlagDatum datum_to_flag(const ExtendingDatum& w);

/// Equivalence witness (g0, h0) with h0 nonzero.
struct FlagWitness {
  Vec g0;
  Scalar h0;
};

/// Transforms a datum by a witness. The witness then carries a morphism
/// from the unified product of the result onto that of the input, so acting
/// on a datum with its classifying witness lands on its orbit representative.
FlagDatum flag_act(const FlagDatum& fd, const FlagWitness& w);  // ZeroH0

/// Witness for acting by `first` and then by `second` in one step.
FlagWitness witness_compose(const FlagWitness& first, const FlagWitness& second);
FlagWitness witness_identity(const FieldSpec& f, int dim);
FlagWitness witness_inverse(const FlagWitness& w);

/// The codimension-1 extension a valid flag datum defines. InvalidFlag.
Extension flag_to_extension(const FlagDatum& fd);

struct FlagOrbits {
  std::vector<FlagDatum> valid;           // enumeration (lexicographic) order
  std::vector<int> equiv_class;           // orbit id under all witnesses
  std::vector<int> cohom_class;           // orbit id under h0 = 1 witnesses
  std::vector<int> equiv_reps;            // index of the lex-min member per orbit
  std::vector<int> cohom_reps;
  int find(const FlagDatum& fd) const;    // index in `valid`, or -1
};

/// Enumerates every valid flag datum over a prime field ((F1) pruned first),
/// then partitions under the witness action: both the full equivalence and
/// the cohomologous (h0 = 1) partitions. InfiniteField over the rationals.
FlagOrbits classify_flags(const DendriformAlgebra& alg, const FieldSpec& field);

}  // namespace dendrikit
