#pragma once

#include "dendrikit/dendriform.hpp"

namespace dendrikit {

/// A bimodule over a dendriform algebra: four actions split as (tr1, tr2)
/// on the left and (tl1, tl2) on the right.
struct DendriformBimodule {
  DendriformAlgebra base;
  int vdim = 0;
  BilinearMap tr1, tr2;  // D x V -> V
  BilinearMap tl1, tl2;  // V x D -> V

  DendriformBimodule(DendriformAlgebra alg, int m)
      : base(std::move(alg)),
        vdim(m),
        tr1(base.field, base.dim, m, m),
        tr2(base.field, base.dim, m, m),
        tl1(base.field, m, base.dim, m),
        tl2(base.field, m, base.dim, m) {}

  bool operator==(const DendriformBimodule& o) const {
    return base == o.base && vdim == o.vdim && tr1 == o.tr1 && tr2 == o.tr2 && tl1 == o.tl1 &&
           tl2 == o.tl2;
  }
};

ValidationReport check_left_module(const DendriformBimodule& m);
ValidationReport check_right_module(const DendriformBimodule& m);
/// Left + right + the three compatibility identities.
ValidationReport check_bimodule(const DendriformBimodule& m);

/// The algebra acting on itself: (tr1,tr2,tl1,tl2) = (succ,prec,succ,prec).
DendriformBimodule regular_module(const DendriformAlgebra& alg);  // InvalidInput

/// Exhaustive scan of all p^(4*dim) one-dimensional action tuples over a
/// prime field, in lexicographic order of (l1, l2, r1, r2) coordinates.
std::vector<DendriformBimodule> enumerate_bimodules(const DendriformAlgebra& alg, int vdim,
                                                    const FieldSpec& field);

/// phi: V -> V' intertwining all four actions over the same base.
ValidationReport check_module_morphism(const LinMap& phi, const DendriformBimodule& src,
                                       const DendriformBimodule& dst);

}  // namespace dendrikit
