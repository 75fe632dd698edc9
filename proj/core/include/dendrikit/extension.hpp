#pragma once

#include <optional>

#include "dendrikit/extending.hpp"

namespace dendrikit {

/// The shape of a datum decides which special product it yields.
ProductKind datum_product_kind(const ExtendingDatum& w);

/// An algebra extension: the leading `subdim` basis vectors span the
/// distinguished subalgebra, and `retraction` is a linear left inverse of
/// its inclusion (defaults to the coordinate projection).
struct Extension {
  DendriformAlgebra total;
  int subdim;
  LinMap retraction;  // subdim x dim(total)

  Extension(DendriformAlgebra e, int n, LinMap rho)
      : total(std::move(e)), subdim(n), retraction(std::move(rho)) {}

  int vdim() const { return total.dim - subdim; }
};

Extension make_extension(DendriformAlgebra total, int subdim);
Extension make_extension(DendriformAlgebra total, int subdim, LinMap retraction);

/// Subalgebra closure of the leading block, retraction-section identity,
/// and the kernel dimension.
ValidationReport check_extension(const Extension& ext);

/// The leading-block subalgebra.
DendriformAlgebra sub_block_algebra(const Extension& ext);

/// Change of basis to (d_1..d_n, w_1..w_m) with w_j spanning ker(retraction);
/// afterwards the retraction is the coordinate projection.
Extension normalize(const Extension& ext);  // NotAnExtension

/// Reads the twelve structure maps off an extension (after normalizing).
ExtendingDatum extract_datum(const Extension& ext);  // NotAnExtension

/// Builds the extension a valid datum defines, with projection retraction.
Extension rebuild_extension(const ExtendingDatum& w);  // InvalidDatum

/// Witness for equivalence of datums: g measures the D-drift of the
/// V-block, h the change of V-coordinates (invertible for equivalence,
/// identity for cohomology).
struct EquivalencePair {
  LinMap g;  // V -> D
  LinMap h;  // V -> V
};

struct EquivalenceReport {
  ValidationReport report;
  bool cohomologous = false;
  bool ok() const { return report.ok(); }
};

/// Conditions (E1)-(E5) with `from` unprimed and `to` primed; the witness
/// then gives a morphism from the unified product of `from` to that of `to`.
EquivalenceReport check_datum_equivalence(const ExtendingDatum& from, const ExtendingDatum& to,
                                          const EquivalencePair& pair);

/// The block map (a,x) -> (a + g(x), h(x)) on D x V.
LinMap build_phi(const EquivalencePair& pair, const ExtendingDatum& from,
                 const ExtendingDatum& to);

/// Exhaustive witness search over a prime field; lexicographically smallest
/// witness wins. InfiniteField over the rationals.
std::optional<EquivalencePair> find_equivalence(const ExtendingDatum& from,
                                                const ExtendingDatum& to);

struct RetractionClassification {
  bool left_module_morphism = false;
  bool right_module_morphism = false;
  bool bimodule_morphism = false;
  bool algebra_morphism = false;
  bool projection_algebra_morphism = false;
  ProductKind product_kind = ProductKind::Unified;
};

/// Reads the morphism properties of the retraction (and of the canonical
/// projection) off the vanishing pattern of the extracted datum.
RetractionClassification classify_retraction(const Extension& ext);

/// The matched-pair datum when the chosen complement is a subalgebra
/// (both cocycles vanish); nullopt otherwise.
std::optional<ExtendingDatum> detect_factorization(const Extension& ext);

enum class SeqCategory { LeftModule, RightModule, Bimodule, Dendriform };

/// Short exact sequence of modules over one algebra.
struct ModuleSeq {
  SeqCategory category;  // LeftModule, RightModule or Bimodule
  DendriformBimodule A, B, C;
  LinMap iota;  // A -> B
  LinMap pi;    // B -> C
};

/// Short exact sequence of dendriform algebras.
struct AlgebraSeq {
  DendriformAlgebra A, B, C;
  LinMap iota;
  LinMap pi;
};

/// iota injective, pi surjective, im iota = ker pi, and both maps morphisms
/// in the category.
ValidationReport check_module_seq(const ModuleSeq& seq);
ValidationReport check_algebra_seq(const AlgebraSeq& seq);

/// Module morphism in the category named by the tag (only the relevant
/// actions are required to intertwine).
ValidationReport check_module_morphism_cat(const LinMap& phi, const DendriformBimodule& src,
                                           const DendriformBimodule& dst, SeqCategory cat);

/// s(x) = (id - iota rho)(pi^-1(x)). Verified independent of the preimage
/// choice, and returned only after pi s = id, rho s = 0 and the morphism
/// property have been checked.
LinMap left_split_to_right(const ModuleSeq& seq, const LinMap& rho);  // NotASplitting

/// rho(y) = iota^-1(y - s(pi(y))).
LinMap right_split_to_left(const ModuleSeq& seq, const LinMap& s);  // NotASplitting

/// Same construction in the algebra category. Needs linear exactness plus
/// iota and rho being algebra morphisms; the morphism property of the
/// result is verified, not assumed.
LinMap alg_left_split_to_right(const AlgebraSeq& seq, const LinMap& rho);  // NotASplitting

/// The sequence sub-block -> total -> (V, sv, pv) of an extension whose
/// complement block is a subalgebra (vanishing cocycles). The projection is
/// an algebra morphism onto (V, sv, pv) exactly when the actions vanish too.
AlgebraSeq algebra_seq_of_extension(const Extension& ext);

/// Searches all candidate retractions for an algebra-morphism left
/// splitting. Exhaustive over GF(p); over the rationals only codimension 1
/// over a 1-dimensional subalgebra is supported (exact quadratic solving).
std::optional<LinMap> find_alg_left_splitting(const Extension& ext);

}  // namespace dendrikit
