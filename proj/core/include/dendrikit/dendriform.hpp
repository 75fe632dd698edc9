#pragma once

#include <string>

#include "dendrikit/linalg.hpp"
#include "dendrikit/report.hpp"

namespace dendrikit {

/// A dendriform algebra: one space with two products whose sum is
/// associative. succ and prec hold the structure constants of the two
/// products on the chosen basis.
struct DendriformAlgebra {
  FieldSpec field;
  int dim = 0;
  BilinearMap succ;
  BilinearMap prec;

  DendriformAlgebra(const FieldSpec& f, int n)
      : field(f), dim(n), succ(f, n, n, n), prec(f, n, n, n) {}

  BilinearMap star() const { return succ + prec; }

  bool operator==(const DendriformAlgebra& o) const {
    return field == o.field && dim == o.dim && succ == o.succ && prec == o.prec;
  }
};

/// Checks the three defining identities on all dim^3 basis triples.
/// The report lists every violation as (axiom id, triple, lhs, rhs).
ValidationReport check_dendriform(const DendriformAlgebra& alg);

enum class InducedKind { Associative, PreLie, Lie };

std::string induced_kind_name(InducedKind k);

struct InducedAlgebra {
  InducedKind kind;
  FieldSpec field;
  int dim;
  BilinearMap product;
};

/// The associative (sum), pre-Lie (x*y = x>y - y<x) or Lie (commutator)
/// algebra carried by a valid dendriform algebra.
InducedAlgebra induce(const DendriformAlgebra& alg, InducedKind kind);  // InvalidInput

/// Associativity / left pre-Lie identity / antisymmetry+Jacobi, exhaustively.
ValidationReport check_induced(const InducedAlgebra& alg);

struct MorphismReport {
  ValidationReport report;
  bool isomorphism = false;
  bool ok() const { return report.ok(); }
};

/// phi must intertwine both products; also reports invertibility.
MorphismReport check_morphism(const LinMap& phi, const DendriformAlgebra& src,
                              const DendriformAlgebra& dst);

DendriformAlgebra direct_sum(const DendriformAlgebra& a, const DendriformAlgebra& b);

/// Built-in fixtures: "exD" (1-dim, e>e=e), "exB" (1-dim, e<e=e),
/// "exE" (the 2-dim algebra containing exD).
DendriformAlgebra example_d(const FieldSpec& f);
DendriformAlgebra example_b(const FieldSpec& f);
DendriformAlgebra example_e(const FieldSpec& f);
DendriformAlgebra zero_algebra(const FieldSpec& f, int dim);
std::optional<DendriformAlgebra> named_algebra(const std::string& name, const FieldSpec& f);

/// Restricts `total` to the subspace spanned by the columns of `basis`;
/// InvalidInput if the span is not closed under both products.
DendriformAlgebra subalgebra_on(const DendriformAlgebra& total, const LinMap& basis);

}  // namespace dendrikit
