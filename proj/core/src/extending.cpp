#include "dendrikit/extending.hpp"

namespace dendrikit {

bool ExtendingDatum::operator==(const ExtendingDatum& o) const {
  return base == o.base && vdim == o.vdim && tr1 == o.tr1 && tr2 == o.tr2 && tl1 == o.tl1 &&
         tl2 == o.tl2 && rh1 == o.rh1 && rh2 == o.rh2 && lh1 == o.lh1 && lh2 == o.lh2 &&
         f1 == o.f1 && f2 == o.f2 && sv == o.sv && pv == o.pv;
}

DendriformBimodule ExtendingDatum::bimodule_part() const {
  DendriformBimodule m(base, vdim);
  m.tr1 = tr1;
  m.tr2 = tr2;
  m.tl1 = tl1;
  m.tl2 = tl2;
  return m;
}

DendriformAlgebra ExtendingDatum::v_algebra() const {
  DendriformAlgebra v(base.field, vdim);
  v.succ = sv;
  v.prec = pv;
  return v;
}

namespace {

// Evaluation context: the twelve maps of a datum plus their pairwise sums,
// with apply() helpers named after the roles they play.
struct Ctx {
  const ExtendingDatum& w;
  int n, m;
  BilinearMap star, tr, tl, rh, lh, f, starv;

  explicit Ctx(const ExtendingDatum& datum)
      : w(datum),
        n(datum.base.dim),
        m(datum.vdim),
        star(datum.base.star()),
        tr(datum.tr1 + datum.tr2),
        tl(datum.tl1 + datum.tl2),
        rh(datum.rh1 + datum.rh2),
        lh(datum.lh1 + datum.lh2),
        f(datum.f1 + datum.f2),
        starv(datum.sv + datum.pv) {}

  Vec ud(int i) const { return Vec::unit(w.base.field, n, i); }
  Vec uv(int i) const { return Vec::unit(w.base.field, m, i); }

  Vec S(const Vec& a, const Vec& b) const { return w.base.succ.apply(a, b); }
  Vec P(const Vec& a, const Vec& b) const { return w.base.prec.apply(a, b); }
  Vec ST(const Vec& a, const Vec& b) const { return star.apply(a, b); }

  Vec TR1(const Vec& a, const Vec& x) const { return w.tr1.apply(a, x); }
  Vec TR2(const Vec& a, const Vec& x) const { return w.tr2.apply(a, x); }
  Vec TR(const Vec& a, const Vec& x) const { return tr.apply(a, x); }
  Vec TL1(const Vec& x, const Vec& a) const { return w.tl1.apply(x, a); }
  Vec TL2(const Vec& x, const Vec& a) const { return w.tl2.apply(x, a); }
  Vec TL(const Vec& x, const Vec& a) const { return tl.apply(x, a); }
  Vec RH1(const Vec& x, const Vec& a) const { return w.rh1.apply(x, a); }
  Vec RH2(const Vec& x, const Vec& a) const { return w.rh2.apply(x, a); }
  Vec RH(const Vec& x, const Vec& a) const { return rh.apply(x, a); }
  Vec LH1(const Vec& a, const Vec& x) const { return w.lh1.apply(a, x); }
  Vec LH2(const Vec& a, const Vec& x) const { return w.lh2.apply(a, x); }
  Vec LH(const Vec& a, const Vec& x) const { return lh.apply(a, x); }
  Vec F1(const Vec& x, const Vec& y) const { return w.f1.apply(x, y); }
  Vec F2(const Vec& x, const Vec& y) const { return w.f2.apply(x, y); }
  Vec F(const Vec& x, const Vec& y) const { return f.apply(x, y); }
  Vec SV(const Vec& x, const Vec& y) const { return w.sv.apply(x, y); }
  Vec PV(const Vec& x, const Vec& y) const { return w.pv.apply(x, y); }
  Vec STV(const Vec& x, const Vec& y) const { return starv.apply(x, y); }
};

void check_eq(ValidationReport& rep, const char* label, std::vector<int> where, const Vec& lhs,
              const Vec& rhs) {
  if (lhs != rhs) rep.add(label, std::move(where), lhs.str(), rhs.str());
}

// (D2)-(D4): two algebra arguments and one space argument.
void check_d2_d4(const Ctx& c, ValidationReport& rep) {
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j)
      for (int k = 0; k < c.m; ++k) {
        const Vec a = c.ud(i), b = c.ud(j), x = c.uv(k);
        check_eq(rep, "(D2) line 1", {i, j, k}, c.LH1(c.ST(a, b), x),
                 c.S(a, c.LH1(b, x)) + c.LH1(a, c.TR1(b, x)));
        check_eq(rep, "(D2) line 2", {i, j, k}, c.LH2(c.P(a, b), x),
                 c.P(a, c.LH(b, x)) + c.LH2(a, c.TR(b, x)));
        check_eq(rep, "(D2) line 3", {i, j, k}, c.LH2(c.S(a, b), x),
                 c.S(a, c.LH2(b, x)) + c.LH1(a, c.TR2(b, x)));

        check_eq(rep, "(D3) line 1", {k, i, j},
                 c.S(c.RH(x, a), b) + c.RH1(c.TL(x, a), b), c.RH1(x, c.S(a, b)));
        check_eq(rep, "(D3) line 2", {k, i, j},
                 c.P(c.RH2(x, a), b) + c.RH2(c.TL2(x, a), b), c.RH2(x, c.ST(a, b)));
        check_eq(rep, "(D3) line 3", {k, i, j},
                 c.P(c.RH1(x, a), b) + c.RH2(c.TL1(x, a), b), c.RH1(x, c.P(a, b)));

        check_eq(rep, "(D4) line 1", {i, k, j},
                 c.S(c.LH(a, x), b) + c.RH1(c.TR(a, x), b),
                 c.S(a, c.RH1(x, b)) + c.LH1(a, c.TL1(x, b)));
        check_eq(rep, "(D4) line 2", {i, k, j},
                 c.P(c.LH2(a, x), b) + c.RH2(c.TR2(a, x), b),
                 c.P(a, c.RH(x, b)) + c.LH2(a, c.TL(x, b)));
        check_eq(rep, "(D4) line 3", {i, k, j},
                 c.P(c.LH1(a, x), b) + c.RH2(c.TR1(a, x), b),
                 c.S(a, c.RH2(x, b)) + c.LH1(a, c.TL2(x, b)));
      }
}

// (D5)-(D10): one algebra argument and two space arguments.
void check_d5_d10(const Ctx& c, ValidationReport& rep) {
  for (int i = 0; i < c.m; ++i)
    for (int j = 0; j < c.m; ++j)
      for (int k = 0; k < c.n; ++k) {
        const Vec x = c.uv(i), y = c.uv(j), a = c.ud(k);

        check_eq(rep, "(D5) line 1", {i, j, k},
                 c.S(c.F(x, y), a) + c.RH1(c.STV(x, y), a),
                 c.RH1(x, c.RH1(y, a)) + c.F1(x, c.TL1(y, a)));
        check_eq(rep, "(D5) line 2", {i, j, k},
                 c.P(c.F2(x, y), a) + c.RH2(c.PV(x, y), a),
                 c.RH2(x, c.RH(y, a)) + c.F2(x, c.TL(y, a)));
        check_eq(rep, "(D5) line 3", {i, j, k},
                 c.P(c.F1(x, y), a) + c.RH2(c.SV(x, y), a),
                 c.RH1(x, c.RH2(y, a)) + c.F1(x, c.TL2(y, a)));

        check_eq(rep, "(D6) line 1", {i, j, k}, c.TL1(c.STV(x, y), a),
                 c.TL1(x, c.RH1(y, a)) + c.SV(x, c.TL1(y, a)));
        check_eq(rep, "(D6) line 2", {i, j, k}, c.TL2(c.PV(x, y), a),
                 c.TL2(x, c.RH(y, a)) + c.PV(x, c.TL(y, a)));
        check_eq(rep, "(D6) line 3", {i, j, k}, c.TL2(c.SV(x, y), a),
                 c.TL1(x, c.RH2(y, a)) + c.SV(x, c.TL2(y, a)));

        check_eq(rep, "(D7) line 1", {k, i, j},
                 c.LH1(c.LH(a, x), y) + c.F1(c.TR(a, x), y),
                 c.S(a, c.F1(x, y)) + c.LH1(a, c.SV(x, y)));
        check_eq(rep, "(D7) line 2", {k, i, j},
                 c.LH2(c.LH2(a, x), y) + c.F2(c.TR2(a, x), y),
                 c.P(a, c.F(x, y)) + c.LH2(a, c.STV(x, y)));
        check_eq(rep, "(D7) line 3", {k, i, j},
                 c.LH2(c.LH1(a, x), y) + c.F2(c.TR1(a, x), y),
                 c.S(a, c.F2(x, y)) + c.LH1(a, c.PV(x, y)));

        check_eq(rep, "(D8) line 1", {k, i, j},
                 c.TR1(c.LH(a, x), y) + c.SV(c.TR(a, x), y), c.TR1(a, c.SV(x, y)));
        check_eq(rep, "(D8) line 2", {k, i, j},
                 c.TR2(c.LH2(a, x), y) + c.PV(c.TR2(a, x), y), c.TR2(a, c.STV(x, y)));
        check_eq(rep, "(D8) line 3", {k, i, j},
                 c.TR2(c.LH1(a, x), y) + c.PV(c.TR1(a, x), y), c.TR1(a, c.PV(x, y)));

        check_eq(rep, "(D9) line 1", {i, k, j},
                 c.LH1(c.RH(x, a), y) + c.F1(c.TL(x, a), y),
                 c.RH1(x, c.LH1(a, y)) + c.F1(x, c.TR1(a, y)));
        check_eq(rep, "(D9) line 2", {i, k, j},
                 c.LH2(c.RH2(x, a), y) + c.F2(c.TL2(x, a), y),
                 c.RH2(x, c.LH(a, y)) + c.F2(x, c.TR(a, y)));
        check_eq(rep, "(D9) line 3", {i, k, j},
                 c.LH2(c.RH1(x, a), y) + c.F2(c.TL1(x, a), y),
                 c.RH1(x, c.LH2(a, y)) + c.F1(x, c.TR2(a, y)));

        check_eq(rep, "(D10) line 1", {i, k, j},
                 c.TR1(c.RH(x, a), y) + c.SV(c.TL(x, a), y),
                 c.TL1(x, c.LH1(a, y)) + c.SV(x, c.TR1(a, y)));
        check_eq(rep, "(D10) line 2", {i, k, j},
                 c.TR2(c.RH2(x, a), y) + c.PV(c.TL2(x, a), y),
                 c.TL2(x, c.LH(a, y)) + c.PV(x, c.TR(a, y)));
        check_eq(rep, "(D10) line 3", {i, k, j},
                 c.TR2(c.RH1(x, a), y) + c.PV(c.TL1(x, a), y),
                 c.TL1(x, c.LH2(a, y)) + c.SV(x, c.TR2(a, y)));
      }
}

// (D11)-(D12): three space arguments.
void check_d11_d12(const Ctx& c, ValidationReport& rep) {
  for (int i = 0; i < c.m; ++i)
    for (int j = 0; j < c.m; ++j)
      for (int k = 0; k < c.m; ++k) {
        const Vec x = c.uv(i), y = c.uv(j), z = c.uv(k);

        check_eq(rep, "(D11) line 1", {i, j, k},
                 c.LH1(c.F(x, y), z) + c.F1(c.STV(x, y), z),
                 c.RH1(x, c.F1(y, z)) + c.F1(x, c.SV(y, z)));
        check_eq(rep, "(D11) line 2", {i, j, k},
                 c.LH2(c.F2(x, y), z) + c.F2(c.PV(x, y), z),
                 c.RH2(x, c.F(y, z)) + c.F2(x, c.STV(y, z)));
        check_eq(rep, "(D11) line 3", {i, j, k},
                 c.LH2(c.F1(x, y), z) + c.F2(c.SV(x, y), z),
                 c.RH1(x, c.F2(y, z)) + c.F1(x, c.PV(y, z)));

        check_eq(rep, "(D12) line 1", {i, j, k},
                 c.TR1(c.F(x, y), z) + c.SV(c.STV(x, y), z),
                 c.TL1(x, c.F1(y, z)) + c.SV(x, c.SV(y, z)));
        check_eq(rep, "(D12) line 2", {i, j, k},
                 c.TR2(c.F2(x, y), z) + c.PV(c.PV(x, y), z),
                 c.TL2(x, c.F(y, z)) + c.PV(x, c.STV(y, z)));
        check_eq(rep, "(D12) line 3", {i, j, k},
                 c.TR2(c.F1(x, y), z) + c.PV(c.SV(x, y), z),
                 c.TL1(x, c.F2(y, z)) + c.SV(x, c.PV(y, z)));
      }
}

}  // namespace

ValidationReport validate_datum(const ExtendingDatum& w) {
  ValidationReport report;
  report.absorb(check_bimodule(w.bimodule_part()), "(D1) ");
  const Ctx c(w);
  check_d2_d4(c, report);
  check_d5_d10(c, report);
  check_d11_d12(c, report);
  return report;
}

std::string product_kind_name(ProductKind k) {
  switch (k) {
    case ProductKind::Unified: return "unified";
    case ProductKind::Bicrossed: return "bicrossed";
    case ProductKind::CocycleSemidirect: return "cocycle-semidirect";
    case ProductKind::NonabelianSemidirect: return "nonabelian-semidirect";
    case ProductKind::AbelianSemidirect: return "abelian-semidirect";
    case ProductKind::DirectSum: return "direct-sum";
  }
  return "?";
}

DendriformAlgebra unified_product_raw(const ExtendingDatum& w) {
  const int n = w.base.dim, m = w.vdim;
  DendriformAlgebra e(w.base.field, n + m);
  auto place = [&](BilinearMap& dest, int i, int j, const Vec& dpart, const Vec& vpart) {
    for (int k = 0; k < n; ++k) dest.c(i, j, k) = dpart[k];
    for (int k = 0; k < m; ++k) dest.c(i, j, n + k) = vpart[k];
  };
  const Vec zero_v(w.base.field, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      place(e.succ, i, j, w.base.succ.at(i, j), zero_v);
      place(e.prec, i, j, w.base.prec.at(i, j), zero_v);
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      place(e.succ, i, n + j, w.lh1.at(i, j), w.tr1.at(i, j));
      place(e.prec, i, n + j, w.lh2.at(i, j), w.tr2.at(i, j));
      place(e.succ, n + j, i, w.rh1.at(j, i), w.tl1.at(j, i));
      place(e.prec, n + j, i, w.rh2.at(j, i), w.tl2.at(j, i));
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      place(e.succ, n + i, n + j, w.f1.at(i, j), w.sv.at(i, j));
      place(e.prec, n + i, n + j, w.f2.at(i, j), w.pv.at(i, j));
    }
  return e;
}

namespace {

ProductKind classify_datum_shape(const ExtendingDatum& w) {
  const bool rh0 = w.has_zero_rh(), lh0 = w.has_zero_lh(), f0 = w.has_zero_cocycles();
  if (rh0 && lh0 && f0 && w.has_zero_actions()) return ProductKind::DirectSum;
  if (rh0 && lh0 && f0 && w.has_zero_v_products()) return ProductKind::AbelianSemidirect;
  if (rh0 && lh0 && f0) return ProductKind::NonabelianSemidirect;
  if (rh0 && lh0) return ProductKind::CocycleSemidirect;
  if (f0) return ProductKind::Bicrossed;
  return ProductKind::Unified;
}

}  // namespace

ProductAlgebra unified_product(const ExtendingDatum& w) {
  auto report = validate_datum(w);
  if (!report.ok())
    throw InvalidDatum("not an extending structure; first failure: " +
                       report.violations().front().str());
  return {unified_product_raw(w), classify_datum_shape(w), w, w.base.dim};
}

InducedDatum induce_datum(const ExtendingDatum& w, InducedKind kind) {
  if (auto report = validate_datum(w); !report.ok())
    throw InvalidDatum("induce_datum on an invalid datum; first failure: " +
                       report.violations().front().str());
  const int n = w.base.dim, m = w.vdim;
  const FieldSpec& f = w.base.field;
  InducedDatum out{kind,
                   f,
                   n,
                   m,
                   BilinearMap(f, n, n, n),
                   BilinearMap(f, n, m, m),
                   BilinearMap(f, m, n, m),
                   BilinearMap(f, m, n, n),
                   BilinearMap(f, n, m, n),
                   BilinearMap(f, m, m, n),
                   BilinearMap(f, m, m, m)};
  switch (kind) {
    case InducedKind::Associative:
      out.base_product = w.base.star();
      out.act_dv = w.tr1 + w.tr2;
      out.act_vd = w.tl1 + w.tl2;
      out.coc_vd = w.rh1 + w.rh2;
      out.coc_dv = w.lh1 + w.lh2;
      out.f = w.f1 + w.f2;
      out.vprod = w.sv + w.pv;
      break;
    case InducedKind::PreLie:
      out.base_product = w.base.succ - w.base.prec.flipped();
      out.act_dv = w.tr1 - w.tl2.flipped();   // a|-x  = a|>1 x - x<|2 a
      out.act_vd = w.tl1 - w.tr2.flipped();   // x-|a  = x<|1 a - a|>2 x
      out.coc_vd = w.rh1 - w.lh2.flipped();   // x>>a  = x->1 a - a<-2 x
      out.coc_dv = w.lh1 - w.rh2.flipped();   // a<<x  = a<-1 x - x->2 a
      out.f = w.f1 - w.f2.flipped();          // f~(x,y) = f1(x,y) - f2(y,x)
      out.vprod = w.sv - w.pv.flipped();
      break;
    case InducedKind::Lie: {
      const BilinearMap star = w.base.star();
      out.base_product = star - star.flipped();
      const BilinearMap tr = w.tr1 + w.tr2, tl = w.tl1 + w.tl2;
      const BilinearMap rh = w.rh1 + w.rh2, lh = w.lh1 + w.lh2;
      out.act_vd = tl - tr.flipped();         // x<|-a = x<|a - a|>x
      out.coc_vd = rh - lh.flipped();         // x|>-a = x->a - a<-x
      const BilinearMap fsum = w.f1 + w.f2;
      out.f = fsum - fsum.flipped();
      const BilinearMap stv = w.sv + w.pv;
      out.vprod = stv - stv.flipped();
      break;
    }
  }
  return out;
}

InducedAlgebra induced_unified_product(const InducedDatum& d) {
  const int n = d.ddim, m = d.vdim;
  BilinearMap prod(d.field, n + m, n + m, n + m);
  auto place = [&](int i, int j, const Vec& dpart, const Vec& vpart) {
    for (int k = 0; k < n; ++k) prod.c(i, j, k) = dpart[k];
    for (int k = 0; k < m; ++k) prod.c(i, j, n + k) = vpart[k];
  };
  const Vec zero_v(d.field, m);
  if (d.kind == InducedKind::Lie) {
    // [(a,x),(b,y)] = ([a,b] + x|>-b - y|>-a + f(x,y), x<|-b - y<|-a + {x,y})
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) place(i, j, d.base_product.at(i, j), zero_v);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) {
        place(i, n + j, -d.coc_vd.at(j, i), -d.act_vd.at(j, i));
        place(n + j, i, d.coc_vd.at(j, i), d.act_vd.at(j, i));
      }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) place(n + i, n + j, d.f.at(i, j), d.vprod.at(i, j));
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) place(i, j, d.base_product.at(i, j), zero_v);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) {
        place(i, n + j, d.coc_dv.at(i, j), d.act_dv.at(i, j));
        place(n + j, i, d.coc_vd.at(j, i), d.act_vd.at(j, i));
      }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) place(n + i, n + j, d.f.at(i, j), d.vprod.at(i, j));
  }
  return {d.kind, d.field, n + m, std::move(prod)};
}

ValidationReport validate_matched_pair(const ExtendingDatum& w) {
  if (!w.has_zero_cocycles())
    throw InvalidMatchedPair("matched pair requires zero cocycles f1, f2");
  if (auto r = check_dendriform(w.v_algebra()); !r.ok())
    throw InvalidMatchedPair("matched pair requires (V, sv, pv) to be a dendriform algebra:\n" +
                             r.str());
  ValidationReport report;
  const Ctx c(w);

  // (M1) a: V is a D bimodule.
  report.absorb(check_bimodule(w.bimodule_part()), "(M1) V-side ");

  // (M1) b: D is a V bimodule through rh (left) and lh (right).
  for (int i = 0; i < c.m; ++i)
    for (int j = 0; j < c.m; ++j)
      for (int k = 0; k < c.n; ++k) {
        const Vec x = c.uv(i), y = c.uv(j), a = c.ud(k);
        check_eq(report, "(M1) D-side left (1)", {i, j, k}, c.RH1(c.STV(x, y), a),
                 c.RH1(x, c.RH1(y, a)));
        check_eq(report, "(M1) D-side left (2)", {i, j, k}, c.RH2(c.PV(x, y), a),
                 c.RH2(x, c.RH(y, a)));
        check_eq(report, "(M1) D-side left (3)", {i, j, k}, c.RH2(c.SV(x, y), a),
                 c.RH1(x, c.RH2(y, a)));
        check_eq(report, "(M1) D-side right (1)", {k, i, j}, c.LH1(c.LH(a, x), y),
                 c.LH1(a, c.SV(x, y)));
        check_eq(report, "(M1) D-side right (2)", {k, i, j}, c.LH2(c.LH2(a, x), y),
                 c.LH2(a, c.STV(x, y)));
        check_eq(report, "(M1) D-side right (3)", {k, i, j}, c.LH2(c.LH1(a, x), y),
                 c.LH1(a, c.PV(x, y)));
        check_eq(report, "(M1) D-side compat (1)", {i, k, j}, c.LH1(c.RH(x, a), y),
                 c.RH1(x, c.LH1(a, y)));
        check_eq(report, "(M1) D-side compat (2)", {i, k, j}, c.LH2(c.RH2(x, a), y),
                 c.RH2(x, c.LH(a, y)));
        check_eq(report, "(M1) D-side compat (3)", {i, k, j}, c.LH2(c.RH1(x, a), y),
                 c.RH1(x, c.LH2(a, y)));
      }

  // (M2)-(M4) couple two algebra arguments with one space argument.
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j)
      for (int k = 0; k < c.m; ++k) {
        const Vec a = c.ud(i), b = c.ud(j), x = c.uv(k);
        check_eq(report, "(M2) line 1", {i, j, k}, c.LH1(c.ST(a, b), x),
                 c.S(a, c.LH1(b, x)) + c.LH1(a, c.TR1(b, x)));
        check_eq(report, "(M2) line 2", {i, j, k}, c.LH2(c.P(a, b), x),
                 c.P(a, c.LH(b, x)) + c.LH2(a, c.TR(b, x)));
        check_eq(report, "(M2) line 3", {i, j, k}, c.LH2(c.S(a, b), x),
                 c.S(a, c.LH2(b, x)) + c.LH1(a, c.TR2(b, x)));
        check_eq(report, "(M3) line 1", {k, i, j},
                 c.S(c.RH(x, a), b) + c.RH1(c.TL(x, a), b), c.RH1(x, c.S(a, b)));
        check_eq(report, "(M3) line 2", {k, i, j},
                 c.P(c.RH2(x, a), b) + c.RH2(c.TL2(x, a), b), c.RH2(x, c.ST(a, b)));
        check_eq(report, "(M3) line 3", {k, i, j},
                 c.P(c.RH1(x, a), b) + c.RH2(c.TL1(x, a), b), c.RH1(x, c.P(a, b)));
        check_eq(report, "(M4) line 1", {i, k, j},
                 c.S(c.LH(a, x), b) + c.RH1(c.TR(a, x), b),
                 c.S(a, c.RH1(x, b)) + c.LH1(a, c.TL1(x, b)));
        check_eq(report, "(M4) line 2", {i, k, j},
                 c.P(c.LH2(a, x), b) + c.RH2(c.TR2(a, x), b),
                 c.P(a, c.RH(x, b)) + c.LH2(a, c.TL(x, b)));
        check_eq(report, "(M4) line 3", {i, k, j},
                 c.P(c.LH1(a, x), b) + c.RH2(c.TR1(a, x), b),
                 c.S(a, c.RH2(x, b)) + c.LH1(a, c.TL2(x, b)));
      }

  // (M5)-(M7) couple one algebra argument with two space arguments.
  for (int i = 0; i < c.m; ++i)
    for (int j = 0; j < c.m; ++j)
      for (int k = 0; k < c.n; ++k) {
        const Vec x = c.uv(i), y = c.uv(j), a = c.ud(k);
        check_eq(report, "(M5) line 1", {i, j, k}, c.TL1(c.STV(x, y), a),
                 c.TL1(x, c.RH1(y, a)) + c.SV(x, c.TL1(y, a)));
        check_eq(report, "(M5) line 2", {i, j, k}, c.TL2(c.PV(x, y), a),
                 c.TL2(x, c.RH(y, a)) + c.PV(x, c.TL(y, a)));
        check_eq(report, "(M5) line 3", {i, j, k}, c.TL2(c.SV(x, y), a),
                 c.TL1(x, c.RH2(y, a)) + c.SV(x, c.TL2(y, a)));
        check_eq(report, "(M6) line 1", {k, i, j},
                 c.TR1(c.LH(a, x), y) + c.SV(c.TR(a, x), y), c.TR1(a, c.SV(x, y)));
        check_eq(report, "(M6) line 2", {k, i, j},
                 c.TR2(c.LH2(a, x), y) + c.PV(c.TR2(a, x), y), c.TR2(a, c.STV(x, y)));
        check_eq(report, "(M6) line 3", {k, i, j},
                 c.TR2(c.LH1(a, x), y) + c.PV(c.TR1(a, x), y), c.TR1(a, c.PV(x, y)));
        check_eq(report, "(M7) line 1", {i, k, j},
                 c.TR1(c.RH(x, a), y) + c.SV(c.TL(x, a), y),
                 c.TL1(x, c.LH1(a, y)) + c.SV(x, c.TR1(a, y)));
        check_eq(report, "(M7) line 2", {i, k, j},
                 c.TR2(c.RH2(x, a), y) + c.PV(c.TL2(x, a), y),
                 c.TL2(x, c.LH(a, y)) + c.PV(x, c.TR(a, y)));
        check_eq(report, "(M7) line 3", {i, k, j},
                 c.TR2(c.RH1(x, a), y) + c.PV(c.TL1(x, a), y),
                 c.TL1(x, c.LH2(a, y)) + c.SV(x, c.TR2(a, y)));
      }
  return report;
}

ProductAlgebra bicrossed_product(const ExtendingDatum& w) {
  if (auto report = validate_matched_pair(w); !report.ok())
    throw InvalidMatchedPair("not a matched pair; first failure: " +
                             report.violations().front().str());
  return {unified_product_raw(w), ProductKind::Bicrossed, w, w.base.dim};
}

ValidationReport validate_cocycle_system(const ExtendingDatum& w) {
  if (!w.has_zero_rh() || !w.has_zero_lh())
    throw InvalidCocycleSystem("cocycle semidirect system requires zero rh/lh actions");
  ValidationReport report;
  report.absorb(check_bimodule(w.bimodule_part()), "bimodule ");
  const Ctx c(w);
  for (int i = 0; i < c.m; ++i)
    for (int j = 0; j < c.m; ++j)
      for (int k = 0; k < c.n; ++k) {
        const Vec x = c.uv(i), y = c.uv(j), a = c.ud(k);
        check_eq(report, "(C1) line 1", {i, j, k}, c.S(c.F(x, y), a), c.F1(x, c.TL1(y, a)));
        check_eq(report, "(C1) line 2", {i, j, k}, c.P(c.F2(x, y), a), c.F2(x, c.TL(y, a)));
        check_eq(report, "(C1) line 3", {i, j, k}, c.P(c.F1(x, y), a), c.F1(x, c.TL2(y, a)));
        check_eq(report, "(C2) line 1", {i, j, k}, c.TL1(c.STV(x, y), a), c.SV(x, c.TL1(y, a)));
        check_eq(report, "(C2) line 2", {i, j, k}, c.TL2(c.PV(x, y), a), c.PV(x, c.TL(y, a)));
        check_eq(report, "(C2) line 3", {i, j, k}, c.TL2(c.SV(x, y), a), c.SV(x, c.TL2(y, a)));
        check_eq(report, "(C3) line 1", {k, i, j}, c.F1(c.TR(a, x), y), c.S(a, c.F1(x, y)));
        check_eq(report, "(C3) line 2", {k, i, j}, c.F2(c.TR2(a, x), y), c.P(a, c.F(x, y)));
        check_eq(report, "(C3) line 3", {k, i, j}, c.F2(c.TR1(a, x), y), c.S(a, c.F2(x, y)));
        check_eq(report, "(C4) line 1", {k, i, j}, c.SV(c.TR(a, x), y), c.TR1(a, c.SV(x, y)));
        check_eq(report, "(C4) line 2", {k, i, j}, c.PV(c.TR2(a, x), y), c.TR2(a, c.STV(x, y)));
        check_eq(report, "(C4) line 3", {k, i, j}, c.PV(c.TR1(a, x), y), c.TR1(a, c.PV(x, y)));
        check_eq(report, "(C5) line 1", {i, k, j}, c.F1(c.TL(x, a), y), c.F1(x, c.TR1(a, y)));
        check_eq(report, "(C5) line 2", {i, k, j}, c.F2(c.TL2(x, a), y), c.F2(x, c.TR(a, y)));
        check_eq(report, "(C5) line 3", {i, k, j}, c.F2(c.TL1(x, a), y), c.F1(x, c.TR2(a, y)));
        check_eq(report, "(C6) line 1", {i, k, j}, c.SV(c.TL(x, a), y), c.SV(x, c.TR1(a, y)));
        check_eq(report, "(C6) line 2", {i, k, j}, c.PV(c.TL2(x, a), y), c.PV(x, c.TR(a, y)));
        check_eq(report, "(C6) line 3", {i, k, j}, c.PV(c.TL1(x, a), y), c.SV(x, c.TR2(a, y)));
      }
  for (int i = 0; i < c.m; ++i)
    for (int j = 0; j < c.m; ++j)
      for (int k = 0; k < c.m; ++k) {
        const Vec x = c.uv(i), y = c.uv(j), z = c.uv(k);
        check_eq(report, "(C7) line 1", {i, j, k}, c.F1(c.STV(x, y), z), c.F1(x, c.SV(y, z)));
        check_eq(report, "(C7) line 2", {i, j, k}, c.F2(c.PV(x, y), z), c.F2(x, c.STV(y, z)));
        check_eq(report, "(C7) line 3", {i, j, k}, c.F2(c.SV(x, y), z), c.F1(x, c.PV(y, z)));
        check_eq(report, "(C8) line 1", {i, j, k}, c.TR1(c.F(x, y), z),
                 c.TL1(x, c.F1(y, z)) + c.SV(x, c.SV(y, z)) - c.SV(c.STV(x, y), z));
        check_eq(report, "(C8) line 2", {i, j, k}, c.TR2(c.F2(x, y), z),
                 c.TL2(x, c.F(y, z)) + c.PV(x, c.STV(y, z)) - c.PV(c.PV(x, y), z));
        check_eq(report, "(C8) line 3", {i, j, k}, c.TR2(c.F1(x, y), z),
                 c.TL1(x, c.F2(y, z)) + c.SV(x, c.PV(y, z)) - c.PV(c.SV(x, y), z));
      }
  return report;
}

ProductAlgebra cocycle_product(const ExtendingDatum& w) {
  if (auto report = validate_cocycle_system(w); !report.ok())
    throw InvalidCocycleSystem("not a cocycle semidirect system; first failure: " +
                               report.violations().front().str());
  return {unified_product_raw(w), ProductKind::CocycleSemidirect, w, w.base.dim};
}

ValidationReport validate_nonabelian_system(const ExtendingDatum& w) {
  if (!w.has_zero_rh() || !w.has_zero_lh() || !w.has_zero_cocycles())
    throw InvalidNonabelianSystem("nonabelian semidirect system requires zero rh/lh/f maps");
  ValidationReport report;
  report.absorb(check_bimodule(w.bimodule_part()), "bimodule ");
  report.absorb(check_dendriform(w.v_algebra()), "V ");
  const Ctx c(w);
  for (int i = 0; i < c.m; ++i)
    for (int j = 0; j < c.m; ++j)
      for (int k = 0; k < c.n; ++k) {
        const Vec x = c.uv(i), y = c.uv(j), a = c.ud(k);
        check_eq(report, "(S1) line 1", {i, j, k}, c.TL1(c.STV(x, y), a), c.SV(x, c.TL1(y, a)));
        check_eq(report, "(S1) line 2", {i, j, k}, c.TL2(c.PV(x, y), a), c.PV(x, c.TL(y, a)));
        check_eq(report, "(S1) line 3", {i, j, k}, c.TL2(c.SV(x, y), a), c.SV(x, c.TL2(y, a)));
        check_eq(report, "(S2) line 1", {k, i, j}, c.SV(c.TR(a, x), y), c.TR1(a, c.SV(x, y)));
        check_eq(report, "(S2) line 2", {k, i, j}, c.PV(c.TR2(a, x), y), c.TR2(a, c.STV(x, y)));
        check_eq(report, "(S2) line 3", {k, i, j}, c.PV(c.TR1(a, x), y), c.TR1(a, c.PV(x, y)));
        check_eq(report, "(S3) line 1", {i, k, j}, c.SV(c.TL(x, a), y), c.SV(x, c.TR1(a, y)));
        check_eq(report, "(S3) line 2", {i, k, j}, c.PV(c.TL2(x, a), y), c.PV(x, c.TR(a, y)));
        check_eq(report, "(S3) line 3", {i, k, j}, c.PV(c.TL1(x, a), y), c.SV(x, c.TR2(a, y)));
      }
  return report;
}

ProductAlgebra nonabelian_product(const ExtendingDatum& w) {
  if (auto report = validate_nonabelian_system(w); !report.ok())
    throw InvalidNonabelianSystem("not a nonabelian semidirect system; first failure: " +
                                  report.violations().front().str());
  return {unified_product_raw(w), ProductKind::NonabelianSemidirect, w, w.base.dim};
}

ExtendingDatum datum_from_bimodule(const DendriformBimodule& m) {
  ExtendingDatum w(m.base, m.vdim);
  w.tr1 = m.tr1;
  w.tr2 = m.tr2;
  w.tl1 = m.tl1;
  w.tl2 = m.tl2;
  return w;
}

ExtendingDatum datum_from_algebras(const DendriformAlgebra& d, const DendriformAlgebra& v) {
  if (d.field != v.field) throw FieldMismatch("direct sum datum across fields");
  ExtendingDatum w(d, v.dim);
  w.sv = v.succ;
  w.pv = v.prec;
  return w;
}

ProductAlgebra abelian_semidirect(const DendriformBimodule& m) {
  if (auto report = check_bimodule(m); !report.ok())
    throw InvalidBimodule("abelian semidirect product needs a bimodule; first failure: " +
                          report.violations().front().str());
  ExtendingDatum w = datum_from_bimodule(m);
  return {unified_product_raw(w), ProductKind::AbelianSemidirect, w, w.base.dim};
}

ProductAlgebra direct_sum_product(const DendriformAlgebra& d, const DendriformAlgebra& v) {
  ExtendingDatum w = datum_from_algebras(d, v);
  if (auto report = validate_datum(w); !report.ok())
    throw InvalidDatum("direct sum of invalid algebras; first failure: " +
                       report.violations().front().str());
  return {unified_product_raw(w), ProductKind::DirectSum, w, w.base.dim};
}

}  // namespace dendrikit
