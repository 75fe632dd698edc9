#include "dendrikit/deformation.hpp"

#include <map>

namespace dendrikit {

namespace {

void check_shapes(const ExtendingDatum& w, const LinMap& d) {
  if (d.rows() != w.base.dim || d.cols() != w.vdim)
    throw DimMismatch("deformation map must send V to D");
}

// The two identities without re-validating the ambient datum.
ValidationReport deformation_identities(const ExtendingDatum& w, const LinMap& d) {
  ValidationReport report;
  const int m = w.vdim;
  const FieldSpec& fld = w.base.field;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Vec x = Vec::unit(fld, m, i), y = Vec::unit(fld, m, j);
      const Vec dx = d.column(i), dy = d.column(j);
      // d(x)>d(y) - d(x >v y) = d(d(x)|>1 y + x<|1 d(y)) - d(x)<-1 y - x->1 d(y) - f1(x,y)
      Vec lhs = w.base.succ.apply(dx, dy) - d.apply(w.sv.at(i, j));
      Vec rhs = d.apply(w.tr1.apply(dx, y) + w.tl1.apply(x, dy)) - w.lh1.apply(dx, y) -
                w.rh1.apply(x, dy) - w.f1.at(i, j);
      if (lhs != rhs) report.add("deformation (>)", {i, j}, lhs.str(), rhs.str());
      lhs = w.base.prec.apply(dx, dy) - d.apply(w.pv.at(i, j));
      rhs = d.apply(w.tr2.apply(dx, y) + w.tl2.apply(x, dy)) - w.lh2.apply(dx, y) -
            w.rh2.apply(x, dy) - w.f2.at(i, j);
      if (lhs != rhs) report.add("deformation (<)", {i, j}, lhs.str(), rhs.str());
    }
  return report;
}

DendriformAlgebra deformed_algebra(const ExtendingDatum& w, const LinMap& d) {
  const int m = w.vdim;
  DendriformAlgebra vd(w.base.field, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Vec x = Vec::unit(w.base.field, m, i), y = Vec::unit(w.base.field, m, j);
      const Vec dx = d.column(i), dy = d.column(j);
      vd.succ.set_pair(i, j, w.sv.at(i, j) + w.tr1.apply(dx, y) + w.tl1.apply(x, dy));
      vd.prec.set_pair(i, j, w.pv.at(i, j) + w.tr2.apply(dx, y) + w.tl2.apply(x, dy));
    }
  return vd;
}

}  // namespace

ValidationReport validate_deformation(const ExtendingDatum& w, const LinMap& d) {
  check_shapes(w, d);
  if (auto report = validate_datum(w); !report.ok())
    throw InvalidDatum("deformation against an invalid datum; first failure: " +
                       report.violations().front().str());
  return deformation_identities(w, d);
}

DendriformAlgebra deform(const ExtendingDatum& w, const LinMap& d) {
  if (auto report = validate_deformation(w, d); !report.ok())
    throw InvalidDeformation("not a deformation map; first failure: " +
                             report.violations().front().str());
  return deformed_algebra(w, d);
}

LinMap complement_to_deformation(const Extension& raw, const Complement& comp) {
  const Extension ext = normalize(raw);
  const int n = ext.subdim, m = ext.vdim();
  const FieldSpec& fld = ext.total.field;
  if (comp.basis.rows() != ext.total.dim || comp.basis.cols() != m)
    throw NotAComplement("complement basis has the wrong shape");
  if (comp.basis.rank() != m) throw NotAComplement("complement basis columns are dependent");

  // D + B must be all of E: [i_D | basis] invertible.
  LinMap joint(fld, ext.total.dim, ext.total.dim);
  for (int i = 0; i < n; ++i) joint.at(i, i) = Scalar::one(fld);
  for (int j = 0; j < m; ++j) joint.set_column(n + j, comp.basis.column(j));
  if (!joint.is_invertible()) throw NotAComplement("complement meets the subalgebra");

  DendriformAlgebra comp_alg(fld, m);
  try {
    comp_alg = subalgebra_on(ext.total, comp.basis);
  } catch (const InvalidInput&) {
    throw NotAComplement("complement is not closed under the products");
  }

  // The retraction associated to B sends u to its D-component along B;
  // d is its negative on the V-block.
  const LinMap joint_inv = joint.inverse();
  LinMap d(fld, n, m);
  for (int j = 0; j < m; ++j) {
    const Vec coords = joint_inv.apply(Vec::unit(fld, ext.total.dim, n + j));
    for (int i = 0; i < n; ++i) d.at(i, j) = -coords[i];
  }

  const ExtendingDatum w = extract_datum(ext);
  if (auto report = deformation_identities(w, d); !report.ok())
    throw NotAComplement("complement does not induce a deformation map: " +
                         report.violations().front().str());

  // x -> x + d(x), in the complement's own coordinates, must be an
  // isomorphism from V_d onto the complement subalgebra.
  const DendriformAlgebra vd = deformed_algebra(w, d);
  LinMap phi(fld, m, m);
  for (int j = 0; j < m; ++j) {
    Vec embedded(fld, ext.total.dim);
    embedded[n + j] = Scalar::one(fld);
    const Vec dj = d.column(j);
    for (int i = 0; i < n; ++i) embedded[i] += dj[i];
    const auto coords = comp.basis.solve(embedded);
    if (!coords) throw NotAComplement("x + d(x) left the complement span");
    phi.set_column(j, *coords);
  }
  const auto morphism = check_morphism(phi, vd, comp_alg);
  if (!morphism.ok() || !morphism.isomorphism)
    throw NotAComplement("x -> x + d(x) is not an isomorphism onto the complement");
  return d;
}

Complement deformation_to_complement(const Extension& raw, const LinMap& d) {
  const Extension ext = normalize(raw);
  const int n = ext.subdim, m = ext.vdim();
  const FieldSpec& fld = ext.total.field;
  const ExtendingDatum w = extract_datum(ext);
  check_shapes(w, d);
  if (auto report = deformation_identities(w, d); !report.ok())
    throw InvalidDeformation("not a deformation map; first failure: " +
                             report.violations().front().str());
  Complement comp{LinMap(fld, ext.total.dim, m)};
  for (int j = 0; j < m; ++j) {
    Vec col(fld, ext.total.dim);
    col[n + j] = Scalar::one(fld);
    const Vec dj = d.column(j);
    for (int i = 0; i < n; ++i) col[i] = dj[i];
    comp.basis.set_column(j, col);
  }
  // Both bijection round trips, revalidated per call.
  const LinMap back = complement_to_deformation(ext, comp);
  if (back != d) throw Error("deformation -> complement -> deformation drifted");
  return comp;
}

ValidationReport check_deformation_equivalence(const ExtendingDatum& w, const LinMap& d,
                                               const LinMap& dprime, const LinMap& delta) {
  check_shapes(w, d);
  check_shapes(w, dprime);
  if (delta.rows() != w.vdim || delta.cols() != w.vdim || !delta.is_invertible())
    throw SingularDelta("delta must be a linear automorphism of V");
  ValidationReport report;
  const int m = w.vdim;
  const FieldSpec& fld = w.base.field;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Vec x = Vec::unit(fld, m, i), y = Vec::unit(fld, m, j);
      const Vec tx = delta.column(i), ty = delta.column(j);
      const Vec dx = d.column(i), dy = d.column(j);
      const Vec dptx = dprime.apply(tx), dpty = dprime.apply(ty);
      Vec lhs = w.sv.apply(tx, ty) - delta.apply(w.sv.at(i, j));
      Vec rhs = delta.apply(w.tr1.apply(dx, y)) + delta.apply(w.tl1.apply(x, dy)) -
                w.tr1.apply(dptx, ty) - w.tl1.apply(tx, dpty);
      if (lhs != rhs) report.add("equivalence (>)", {i, j}, lhs.str(), rhs.str());
      lhs = w.pv.apply(tx, ty) - delta.apply(w.pv.at(i, j));
      rhs = delta.apply(w.tr2.apply(dx, y)) + delta.apply(w.tl2.apply(x, dy)) -
            w.tr2.apply(dptx, ty) - w.tl2.apply(tx, dpty);
      if (lhs != rhs) report.add("equivalence (<)", {i, j}, lhs.str(), rhs.str());
    }

  // When both maps deform, passing must agree with delta: V_d -> V_d' being
  // an algebra isomorphism.
  if (deformation_identities(w, d).ok() && deformation_identities(w, dprime).ok()) {
    const bool iso =
        check_morphism(delta, deformed_algebra(w, d), deformed_algebra(w, dprime)).ok();
    if (iso != report.ok())
      throw Error("deformation equivalence disagrees with the morphism route");
  }
  return report;
}

ComplementClassification enumerate_complements(const Extension& raw, const FieldSpec& field) {
  if (field.kind != FieldKind::PrimeField)
    throw InfiniteField("complement classification needs a finite field");
  const Extension ext = normalize(raw);
  if (ext.total.field != field) throw FieldMismatch("extension is not over the requested field");
  const ExtendingDatum w = extract_datum(ext);
  const int n = ext.subdim, m = ext.vdim();
  const long p = field.p;

  ComplementClassification out;
  // All p^(n m) linear maps V -> D, odometer order.
  std::vector<long> digits(static_cast<size_t>(n) * m, 0);
  while (true) {
    LinMap d(field, n, m);
    int idx = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) d.at(i, j) = Scalar::of(field, digits[idx++]);
    if (deformation_identities(w, d).ok()) out.deformations.push_back(std::move(d));
    int pos = static_cast<int>(digits.size()) - 1;
    while (pos >= 0 && digits[pos] == p - 1) digits[pos--] = 0;
    if (pos < 0) break;
    ++digits[pos];
  }

  // Pairwise delta-search over GL(V).
  std::vector<LinMap> units;
  {
    std::vector<long> hd(static_cast<size_t>(m) * m, 0);
    while (true) {
      LinMap h(field, m, m);
      int idx = 0;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) h.at(i, j) = Scalar::of(field, hd[idx++]);
      if (h.is_invertible()) units.push_back(std::move(h));
      int pos = static_cast<int>(hd.size()) - 1;
      while (pos >= 0 && hd[pos] == p - 1) hd[pos--] = 0;
      if (pos < 0) break;
      ++hd[pos];
    }
  }
  const int count = static_cast<int>(out.deformations.size());
  std::vector<int> parent(count);
  for (int i = 0; i < count; ++i) parent[i] = i;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) {
      if (find(i) == find(j)) continue;
      for (const auto& delta : units) {
        if (check_deformation_equivalence(w, out.deformations[i], out.deformations[j], delta)
                .ok()) {
          parent[find(i)] = find(j);
          break;
        }
      }
    }

  std::map<int, int> root_min;
  auto lex_less = [&](const LinMap& a, const LinMap& b) {
    for (int r = 0; r < a.rows(); ++r)
      for (int c = 0; c < a.cols(); ++c)
        if (int v = a.at(r, c).cmp(b.at(r, c)); v != 0) return v < 0;
    return false;
  };
  for (int i = 0; i < count; ++i) {
    auto [it, inserted] = root_min.emplace(find(i), i);
    if (!inserted && lex_less(out.deformations[i], out.deformations[it->second])) it->second = i;
  }
  std::map<int, int> root_id;
  for (const auto& [root, rep] : root_min) {
    root_id[root] = static_cast<int>(out.class_reps.size());
    out.class_reps.push_back(rep);
  }
  out.cls.resize(count);
  for (int i = 0; i < count; ++i) out.cls[i] = root_id[find(i)];
  out.index = static_cast<int>(out.class_reps.size());
  for (const auto& d : out.deformations) out.complements.push_back(deformation_to_complement(ext, d));
  return out;
}

}  // namespace dendrikit
