#include "dendrikit/bimodule.hpp"

#include "dendrikit/parallel.hpp"

namespace dendrikit {

ValidationReport check_left_module(const DendriformBimodule& m) {
  ValidationReport report;
  const int n = m.base.dim;
  const auto& sD = m.base.succ;
  const auto& pD = m.base.prec;
  const BilinearMap star = m.base.star();
  const BilinearMap tr = m.tr1 + m.tr2;
  auto ud = [&](int i) { return Vec::unit(m.base.field, n, i); };
  auto uv = [&](int i) { return Vec::unit(m.base.field, m.vdim, i); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int x = 0; x < m.vdim; ++x) {
        Vec lhs = m.tr1.apply(star.at(a, b), uv(x));
        Vec rhs = m.tr1.apply(ud(a), m.tr1.at(b, x));
        if (lhs != rhs) report.add("left module (1)", {a, b, x}, lhs.str(), rhs.str());
        lhs = m.tr2.apply(pD.at(a, b), uv(x));
        rhs = m.tr2.apply(ud(a), tr.at(b, x));
        if (lhs != rhs) report.add("left module (2)", {a, b, x}, lhs.str(), rhs.str());
        lhs = m.tr2.apply(sD.at(a, b), uv(x));
        rhs = m.tr1.apply(ud(a), m.tr2.at(b, x));
        if (lhs != rhs) report.add("left module (3)", {a, b, x}, lhs.str(), rhs.str());
      }
  return report;
}

ValidationReport check_right_module(const DendriformBimodule& m) {
  ValidationReport report;
  const int n = m.base.dim;
  const auto& sD = m.base.succ;
  const auto& pD = m.base.prec;
  const BilinearMap star = m.base.star();
  const BilinearMap tl = m.tl1 + m.tl2;
  auto ud = [&](int i) { return Vec::unit(m.base.field, n, i); };
  auto uv = [&](int i) { return Vec::unit(m.base.field, m.vdim, i); };
  for (int x = 0; x < m.vdim; ++x)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Vec lhs = m.tl1.apply(tl.at(x, a), ud(b));
        Vec rhs = m.tl1.apply(uv(x), sD.at(a, b));
        if (lhs != rhs) report.add("right module (1)", {x, a, b}, lhs.str(), rhs.str());
        lhs = m.tl2.apply(m.tl2.at(x, a), ud(b));
        rhs = m.tl2.apply(uv(x), star.at(a, b));
        if (lhs != rhs) report.add("right module (2)", {x, a, b}, lhs.str(), rhs.str());
        lhs = m.tl2.apply(m.tl1.at(x, a), ud(b));
        rhs = m.tl1.apply(uv(x), pD.at(a, b));
        if (lhs != rhs) report.add("right module (3)", {x, a, b}, lhs.str(), rhs.str());
      }
  return report;
}

ValidationReport check_bimodule(const DendriformBimodule& m) {
  ValidationReport report = check_left_module(m);
  report.absorb(check_right_module(m));
  const int n = m.base.dim;
  const BilinearMap tr = m.tr1 + m.tr2;
  const BilinearMap tl = m.tl1 + m.tl2;
  auto ud = [&](int i) { return Vec::unit(m.base.field, n, i); };
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < m.vdim; ++x)
      for (int b = 0; b < n; ++b) {
        Vec lhs = m.tl1.apply(tr.at(a, x), ud(b));
        Vec rhs = m.tr1.apply(ud(a), m.tl1.at(x, b));
        if (lhs != rhs) report.add("compatibility (1)", {a, x, b}, lhs.str(), rhs.str());
        lhs = m.tl2.apply(m.tr2.at(a, x), ud(b));
        rhs = m.tr2.apply(ud(a), tl.at(x, b));
        if (lhs != rhs) report.add("compatibility (2)", {a, x, b}, lhs.str(), rhs.str());
        lhs = m.tl2.apply(m.tr1.at(a, x), ud(b));
        rhs = m.tr1.apply(ud(a), m.tl2.at(x, b));
        if (lhs != rhs) report.add("compatibility (3)", {a, x, b}, lhs.str(), rhs.str());
      }
  return report;
}

DendriformBimodule regular_module(const DendriformAlgebra& alg) {
  if (auto r = check_dendriform(alg); !r.ok())
    throw InvalidInput("regular module over an invalid algebra:\n" + r.str());
  DendriformBimodule m(alg, alg.dim);
  m.tr1 = alg.succ;
  m.tr2 = alg.prec;
  m.tl1 = alg.succ;
  m.tl2 = alg.prec;
  return m;
}

std::vector<DendriformBimodule> enumerate_bimodules(const DendriformAlgebra& alg, int vdim,
                                                    const FieldSpec& field) {
  if (field.kind != FieldKind::PrimeField)
    throw InfiniteField("bimodule enumeration needs a finite field");
  if (alg.field != field) throw FieldMismatch("algebra is not over the enumeration field");
  if (vdim != 1) throw Unsupported("bimodule enumeration is implemented for vdim 1");

  const int n = alg.dim;
  const int params = 4 * n;  // l1, l2, r1, r2 coordinates
  std::int64_t total = 1;
  for (int i = 0; i < params; ++i) total *= field.p;

  auto build = [&](std::int64_t index) {
    DendriformBimodule m(alg, 1);
    std::vector<long> digits(params);
    for (int i = params - 1; i >= 0; --i) {
      digits[i] = static_cast<long>(index % field.p);
      index /= field.p;
    }
    // Digit order matches the (l1, l2, r1, r2) tuple order.
    for (int i = 0; i < n; ++i) m.tr1.c(i, 0, 0) = Scalar::of(field, digits[i]);
    for (int i = 0; i < n; ++i) m.tr2.c(i, 0, 0) = Scalar::of(field, digits[n + i]);
    for (int i = 0; i < n; ++i) m.tl1.c(0, i, 0) = Scalar::of(field, digits[2 * n + i]);
    for (int i = 0; i < n; ++i) m.tl2.c(0, i, 0) = Scalar::of(field, digits[3 * n + i]);
    return m;
  };

  std::vector<std::vector<DendriformBimodule>> found(worker_count());
  parallel_chunks(total, [&](std::int64_t begin, std::int64_t end, int slot) {
    for (std::int64_t idx = begin; idx < end; ++idx) {
      DendriformBimodule m = build(idx);
      if (check_bimodule(m).ok()) found[slot].push_back(std::move(m));
    }
  });

  std::vector<DendriformBimodule> out;
  for (auto& chunk : found)
    for (auto& m : chunk) out.push_back(std::move(m));
  return out;
}

ValidationReport check_module_morphism(const LinMap& phi, const DendriformBimodule& src,
                                       const DendriformBimodule& dst) {
  if (!(src.base == dst.base)) throw InvalidInput("module morphism needs a common base algebra");
  if (phi.cols() != src.vdim || phi.rows() != dst.vdim)
    throw DimMismatch("module morphism shape mismatch");
  ValidationReport report;
  const int n = src.base.dim;
  auto ud = [&](int i) { return Vec::unit(src.base.field, n, i); };
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < src.vdim; ++x) {
      const Vec px = phi.column(x);
      Vec lhs = phi.apply(src.tr1.at(a, x));
      Vec rhs = dst.tr1.apply(ud(a), px);
      if (lhs != rhs) report.add("left morphism (1)", {a, x}, lhs.str(), rhs.str());
      lhs = phi.apply(src.tr2.at(a, x));
      rhs = dst.tr2.apply(ud(a), px);
      if (lhs != rhs) report.add("left morphism (2)", {a, x}, lhs.str(), rhs.str());
      lhs = phi.apply(src.tl1.at(x, a));
      rhs = dst.tl1.apply(px, ud(a));
      if (lhs != rhs) report.add("right morphism (1)", {x, a}, lhs.str(), rhs.str());
      lhs = phi.apply(src.tl2.at(x, a));
      rhs = dst.tl2.apply(px, ud(a));
      if (lhs != rhs) report.add("right morphism (2)", {x, a}, lhs.str(), rhs.str());
    }
  return report;
}

}  // namespace dendrikit
