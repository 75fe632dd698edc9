#include "dendrikit/dendriform.hpp"

namespace dendrikit {

ValidationReport check_dendriform(const DendriformAlgebra& alg) {
  ValidationReport report;
  const int n = alg.dim;
  const auto& s = alg.succ;
  const auto& p = alg.prec;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec sij = s.at(i, j);
      const Vec pij = p.at(i, j);
      const Vec starij = sij + pij;
      for (int k = 0; k < n; ++k) {
        const Vec ek = Vec::unit(alg.field, n, k);
        // (x>y + x<y)>z = x>(y>z)
        Vec lhs = s.apply(starij, ek);
        Vec rhs = s.apply(Vec::unit(alg.field, n, i), s.at(j, k));
        if (lhs != rhs) report.add("axiom (1)", {i, j, k}, lhs.str(), rhs.str());
        // (x<y)<z = x<(y>z + y<z)
        lhs = p.apply(pij, ek);
        rhs = p.apply(Vec::unit(alg.field, n, i), s.at(j, k) + p.at(j, k));
        if (lhs != rhs) report.add("axiom (2)", {i, j, k}, lhs.str(), rhs.str());
        // (x>y)<z = x>(y<z)
        lhs = p.apply(sij, ek);
        rhs = s.apply(Vec::unit(alg.field, n, i), p.at(j, k));
        if (lhs != rhs) report.add("axiom (3)", {i, j, k}, lhs.str(), rhs.str());
      }
    }
  return report;
}

std::string induced_kind_name(InducedKind k) {
  switch (k) {
    case InducedKind::Associative: return "associative";
    case InducedKind::PreLie: return "prelie";
    case InducedKind::Lie: return "lie";
  }
  return "?";
}

InducedAlgebra induce(const DendriformAlgebra& alg, InducedKind kind) {
  if (auto report = check_dendriform(alg); !report.ok())
    throw InvalidInput("induce on an invalid dendriform algebra:\n" + report.str());
  const int n = alg.dim;
  BilinearMap prod(alg.field, n, n, n);
  switch (kind) {
    case InducedKind::Associative:
      prod = alg.star();
      break;
    case InducedKind::PreLie:
      // x*y = x>y - y<x
      prod = alg.succ - alg.prec.flipped();
      break;
    case InducedKind::Lie: {
      const BilinearMap star = alg.star();
      prod = star - star.flipped();
      break;
    }
  }
  return {kind, alg.field, n, std::move(prod)};
}

ValidationReport check_induced(const InducedAlgebra& alg) {
  ValidationReport report;
  const int n = alg.dim;
  const auto& m = alg.product;
  auto unit = [&](int i) { return Vec::unit(alg.field, n, i); };
  switch (alg.kind) {
    case InducedKind::Associative:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            const Vec lhs = m.apply(m.at(i, j), unit(k));
            const Vec rhs = m.apply(unit(i), m.at(j, k));
            if (lhs != rhs) report.add("associativity", {i, j, k}, lhs.str(), rhs.str());
          }
      break;
    case InducedKind::PreLie:
      // (x*y)*z - x*(y*z) is symmetric in x,y.
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            const Vec lhs =
                m.apply(m.at(i, j), unit(k)) - m.apply(unit(i), m.at(j, k));
            const Vec rhs =
                m.apply(m.at(j, i), unit(k)) - m.apply(unit(j), m.at(i, k));
            if (lhs != rhs) report.add("left pre-Lie", {i, j, k}, lhs.str(), rhs.str());
          }
      break;
    case InducedKind::Lie:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Vec lhs = m.at(i, j);
          const Vec rhs = -m.at(j, i);
          if (lhs != rhs) report.add("antisymmetry", {i, j}, lhs.str(), rhs.str());
        }
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            const Vec jac = m.apply(m.at(i, j), unit(k)) + m.apply(m.at(j, k), unit(i)) +
                            m.apply(m.at(k, i), unit(j));
            if (!jac.is_zero())
              report.add("Jacobi", {i, j, k}, jac.str(), Vec(alg.field, n).str());
          }
      break;
  }
  return report;
}

MorphismReport check_morphism(const LinMap& phi, const DendriformAlgebra& src,
                              const DendriformAlgebra& dst) {
  if (phi.cols() != src.dim || phi.rows() != dst.dim)
    throw DimMismatch("morphism shape " + std::to_string(phi.rows()) + "x" +
                      std::to_string(phi.cols()) + " does not match algebras");
  MorphismReport out;
  for (int i = 0; i < src.dim; ++i)
    for (int j = 0; j < src.dim; ++j) {
      const Vec pi = phi.column(i);
      const Vec pj = phi.column(j);
      Vec lhs = phi.apply(src.succ.at(i, j));
      Vec rhs = dst.succ.apply(pi, pj);
      if (lhs != rhs) out.report.add("morphism (>)", {i, j}, lhs.str(), rhs.str());
      lhs = phi.apply(src.prec.at(i, j));
      rhs = dst.prec.apply(pi, pj);
      if (lhs != rhs) out.report.add("morphism (<)", {i, j}, lhs.str(), rhs.str());
    }
  out.isomorphism = out.report.ok() && phi.is_invertible();
  return out;
}

DendriformAlgebra direct_sum(const DendriformAlgebra& a, const DendriformAlgebra& b) {
  if (a.field != b.field) throw FieldMismatch("direct sum across fields");
  DendriformAlgebra out(a.field, a.dim + b.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k) {
        out.succ.c(i, j, k) = a.succ.c(i, j, k);
        out.prec.c(i, j, k) = a.prec.c(i, j, k);
      }
  for (int i = 0; i < b.dim; ++i)
    for (int j = 0; j < b.dim; ++j)
      for (int k = 0; k < b.dim; ++k) {
        out.succ.c(a.dim + i, a.dim + j, a.dim + k) = b.succ.c(i, j, k);
        out.prec.c(a.dim + i, a.dim + j, a.dim + k) = b.prec.c(i, j, k);
      }
  return out;
}

DendriformAlgebra example_d(const FieldSpec& f) {
  DendriformAlgebra d(f, 1);
  d.succ.c(0, 0, 0) = Scalar::one(f);
  return d;
}

DendriformAlgebra example_b(const FieldSpec& f) {
  DendriformAlgebra b(f, 1);
  b.prec.c(0, 0, 0) = Scalar::one(f);
  return b;
}

DendriformAlgebra example_e(const FieldSpec& f) {
  DendriformAlgebra e(f, 2);
  auto s = [&](long v) { return Scalar::of(f, v); };
  e.succ.c(0, 0, 0) = s(1);   // e1>e1 = e1
  e.succ.c(0, 1, 1) = s(1);   // e1>e2 = e2
  e.succ.c(1, 0, 0) = s(2);   // e2>e1 = 2e1
  e.succ.c(1, 1, 1) = s(2);   // e2>e2 = 2e2
  e.prec.c(0, 1, 0) = s(2);   // e1<e2 = 2e1 - e2
  e.prec.c(0, 1, 1) = s(-1);
  e.prec.c(1, 1, 0) = s(4);   // e2<e2 = 4e1 - 2e2
  e.prec.c(1, 1, 1) = s(-2);
  return e;
}

DendriformAlgebra zero_algebra(const FieldSpec& f, int dim) { return DendriformAlgebra(f, dim); }

std::optional<DendriformAlgebra> named_algebra(const std::string& name, const FieldSpec& f) {
  if (name == "exD") return example_d(f);
  if (name == "exB") return example_b(f);
  if (name == "exE") return example_e(f);
  if (name == "zero1") return zero_algebra(f, 1);
  if (name == "zero2") return zero_algebra(f, 2);
  return std::nullopt;
}

DendriformAlgebra subalgebra_on(const DendriformAlgebra& total, const LinMap& basis) {
  const int k = basis.cols();
  if (basis.rows() != total.dim) throw DimMismatch("subalgebra basis lives in the wrong space");
  if (basis.rank() != k) throw InvalidInput("subalgebra basis columns are dependent");
  DendriformAlgebra out(total.field, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const Vec bi = basis.column(i);
      const Vec bj = basis.column(j);
      auto sc = basis.solve(total.succ.apply(bi, bj));
      auto pc = basis.solve(total.prec.apply(bi, bj));
      if (!sc || !pc) throw InvalidInput("span is not closed under the products");
      out.succ.set_pair(i, j, *sc);
      out.prec.set_pair(i, j, *pc);
    }
  return out;
}

}  // namespace dendrikit
