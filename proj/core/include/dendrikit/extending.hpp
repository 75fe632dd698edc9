#pragma once

#include "dendrikit/bimodule.hpp"

namespace dendrikit {

/// The twelve bilinear maps relating an algebra D and a space V. A raw datum
/// carries no validity promise; validate_datum decides whether it is an
/// extending structure.
struct ExtendingDatum {
  DendriformAlgebra base;
  int vdim = 0;
  BilinearMap tr1, tr2;  // D x V -> V   (split left actions)
  BilinearMap tl1, tl2;  // V x D -> V   (split right actions)
  BilinearMap rh1, rh2;  // V x D -> D
  BilinearMap lh1, lh2;  // D x V -> D
  BilinearMap f1, f2;    // V x V -> D   (cocycles)
  BilinearMap sv, pv;    // V x V -> V   (the two products on V)

  ExtendingDatum(DendriformAlgebra alg, int m)
      : base(std::move(alg)),
        vdim(m),
        tr1(base.field, base.dim, m, m),
        tr2(base.field, base.dim, m, m),
        tl1(base.field, m, base.dim, m),
        tl2(base.field, m, base.dim, m),
        rh1(base.field, m, base.dim, base.dim),
        rh2(base.field, m, base.dim, base.dim),
        lh1(base.field, base.dim, m, base.dim),
        lh2(base.field, base.dim, m, base.dim),
        f1(base.field, m, m, base.dim),
        f2(base.field, m, m, base.dim),
        sv(base.field, m, m, m),
        pv(base.field, m, m, m) {}

  bool operator==(const ExtendingDatum& o) const;

  DendriformBimodule bimodule_part() const;
  /// The candidate algebra (V, sv, pv).
  DendriformAlgebra v_algebra() const;

  bool has_zero_cocycles() const { return f1.is_zero() && f2.is_zero(); }
  bool has_zero_rh() const { return rh1.is_zero() && rh2.is_zero(); }
  bool has_zero_lh() const { return lh1.is_zero() && lh2.is_zero(); }
  bool has_zero_actions() const {
    return tr1.is_zero() && tr2.is_zero() && tl1.is_zero() && tl2.is_zero();
  }
  bool has_zero_v_products() const { return sv.is_zero() && pv.is_zero(); }
};

/// Conditions (D1)-(D12); (D1) delegates to the bimodule checks. Labels in
/// the report are "(Dk) line j".
ValidationReport validate_datum(const ExtendingDatum& w);

enum class ProductKind {
  Unified,
  Bicrossed,
  CocycleSemidirect,
  NonabelianSemidirect,
  AbelianSemidirect,
  DirectSum
};

std::string product_kind_name(ProductKind k);

/// An algebra on D x V built from a datum; basis indices 0..n-1 are the
/// D-block, n..n+m-1 the V-block.
struct ProductAlgebra {
  DendriformAlgebra algebra;
  ProductKind provenance;
  ExtendingDatum datum;
  int subdim;
};

/// The product algebra of a raw datum, built without validating it.
DendriformAlgebra unified_product_raw(const ExtendingDatum& w);
/// The unified product of a valid datum; InvalidDatum names a failing label.
ProductAlgebra unified_product(const ExtendingDatum& w);

/// The associative / pre-Lie / Lie datum carried by a dendriform datum.
/// Lie datums have only the four antisymmetrized maps; the unused slots of
/// this container stay empty for that kind.
struct InducedDatum {
  InducedKind kind;
  FieldSpec field;
  int ddim, vdim;
  BilinearMap base_product;  // on D
  BilinearMap act_dv;        // D x V -> V (assoc, prelie)
  BilinearMap act_vd;        // V x D -> V (all kinds)
  BilinearMap coc_vd;        // V x D -> D (all kinds)
  BilinearMap coc_dv;        // D x V -> D (assoc, prelie)
  BilinearMap f;             // V x V -> D
  BilinearMap vprod;         // V x V -> V
};

InducedDatum induce_datum(const ExtendingDatum& w, InducedKind kind);  // InvalidDatum

/// The product on D x V that the induced datum defines; for Lie this is the
/// bracket of the corresponding extending structure.
InducedAlgebra induced_unified_product(const InducedDatum& d);

/// Matched pair: zero cocycles, both D and (V, sv, pv) honest algebras,
/// conditions (M1)-(M7). Checked independently of (D1)-(D12).
ValidationReport validate_matched_pair(const ExtendingDatum& w);  // InvalidMatchedPair on shape
ProductAlgebra bicrossed_product(const ExtendingDatum& w);

/// Cocycle semidirect system: rh/lh zero, conditions (C1)-(C8) plus the
/// bimodule part.
ValidationReport validate_cocycle_system(const ExtendingDatum& w);  // InvalidCocycleSystem
ProductAlgebra cocycle_product(const ExtendingDatum& w);

/// Nonabelian semidirect system: rh/lh/f zero, bimodule + V algebra +
/// (S1)-(S3).
ValidationReport validate_nonabelian_system(const ExtendingDatum& w);  // InvalidNonabelianSystem
ProductAlgebra nonabelian_product(const ExtendingDatum& w);

ProductAlgebra abelian_semidirect(const DendriformBimodule& m);  // InvalidBimodule

/// The direct sum D + V as a product algebra over the padded datum.
ProductAlgebra direct_sum_product(const DendriformAlgebra& d, const DendriformAlgebra& v);

/// Datum embeddings of the special cases (zero-padded to twelve maps).
ExtendingDatum datum_from_bimodule(const DendriformBimodule& m);
ExtendingDatum datum_from_algebras(const DendriformAlgebra& d, const DendriformAlgebra& v);

}  // namespace dendrikit
