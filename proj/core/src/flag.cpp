#include "dendrikit/flag.hpp"

#include <numeric>
#include <sstream>

#include "dendrikit/parallel.hpp"

namespace dendrikit {

std::vector<Scalar> FlagDatum::tuple() const {
  std::vector<Scalar> t;
  const int n = base.dim;
  t.reserve(4 * n + 4 * n * n + 2 * n + 2);
  for (const LinMap* f : {&l1, &l2, &r1, &r2})
    for (int i = 0; i < n; ++i) t.push_back(f->at(0, i));
  for (const LinMap* f : {&p1, &p2, &q1, &q2})
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t.push_back(f->at(i, j));
  for (const Vec* v : {&a1, &a2})
    for (int i = 0; i < n; ++i) t.push_back((*v)[i]);
  t.push_back(k1);
  t.push_back(k2);
  return t;
}

namespace {

std::string tuple_key(const FlagDatum& fd) {
  std::ostringstream os;
  for (const auto& s : fd.tuple()) os << s.str() << ',';
  return os.str();
}

int tuple_cmp(const FlagDatum& a, const FlagDatum& b) {
  const auto ta = a.tuple(), tb = b.tuple();
  for (size_t i = 0; i < ta.size(); ++i)
    if (int c = ta[i].cmp(tb[i]); c != 0) return c;
  return 0;
}

struct FlagCtx {
  const FlagDatum& fd;
  int n;
  BilinearMap star;

  explicit FlagCtx(const FlagDatum& f) : fd(f), n(f.base.dim), star(f.base.star()) {}

  Vec ud(int i) const { return Vec::unit(fd.base.field, n, i); }
  Vec S(const Vec& a, const Vec& b) const { return fd.base.succ.apply(a, b); }
  Vec P(const Vec& a, const Vec& b) const { return fd.base.prec.apply(a, b); }
  Scalar L1(const Vec& a) const { return fd.l1.apply(a)[0]; }
  Scalar L2(const Vec& a) const { return fd.l2.apply(a)[0]; }
  Scalar R1(const Vec& a) const { return fd.r1.apply(a)[0]; }
  Scalar R2(const Vec& a) const { return fd.r2.apply(a)[0]; }
  Vec P1(const Vec& a) const { return fd.p1.apply(a); }
  Vec P2(const Vec& a) const { return fd.p2.apply(a); }
  Vec Q1(const Vec& a) const { return fd.q1.apply(a); }
  Vec Q2(const Vec& a) const { return fd.q2.apply(a); }
};

// Collects violations into a report, or short-circuits in fast mode
// (report == nullptr) so enumeration can discard candidates at the first
// failed line.
struct FlagChecker {
  ValidationReport* report = nullptr;
  bool ok = true;
  bool fast_fail() const { return !ok && report == nullptr; }
};

void scalar_eq(FlagChecker& chk, const char* label, std::vector<int> where, const Scalar& l,
               const Scalar& r) {
  if (l == r) return;
  chk.ok = false;
  if (chk.report) chk.report->add(label, std::move(where), l.str(), r.str());
}

void vec_eq(FlagChecker& chk, const char* label, std::vector<int> where, const Vec& l,
            const Vec& r) {
  if (l == r) return;
  chk.ok = false;
  if (chk.report) chk.report->add(label, std::move(where), l.str(), r.str());
}

// (F1): the functional identities; the only group touching l and r alone.
void check_f1(const FlagCtx& c, FlagChecker& rep) {
  const Scalar zero = Scalar::zero(c.fd.base.field);
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j) {
      const Vec a = c.ud(i), b = c.ud(j);
      scalar_eq(rep, "(F1) line 1", {i, j}, c.L1(c.S(a, b) + c.P(a, b)), c.L1(a) * c.L1(b));
      scalar_eq(rep, "(F1) line 2", {i, j}, c.L2(c.P(a, b)), c.L2(a) * (c.L1(b) + c.L2(b)));
      scalar_eq(rep, "(F1) line 3", {i, j}, c.L2(c.S(a, b)), c.L1(a) * c.L2(b));
      scalar_eq(rep, "(F1) line 4", {i, j}, (c.R1(a) + c.R2(a)) * c.R1(b), c.R1(c.S(a, b)));
      scalar_eq(rep, "(F1) line 5", {i, j}, c.R2(a) * c.R2(b), c.R2(c.S(a, b) + c.P(a, b)));
      scalar_eq(rep, "(F1) line 6", {i, j}, c.R1(a) * c.R2(b), c.R1(c.P(a, b)));
      scalar_eq(rep, "(F1) line 7", {i, j}, c.L2(a) * c.R1(b), zero);
      if (rep.fast_fail()) return;
    }
}

void check_f2_f12(const FlagCtx& c, FlagChecker& rep) {
  const FieldSpec& fld = c.fd.base.field;
  const auto& fd = c.fd;
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j) {
      const Vec a = c.ud(i), b = c.ud(j);
      vec_eq(rep, "(F2) line 1", {i, j}, c.Q1(c.S(a, b) + c.P(a, b)),
             c.S(a, c.Q1(b)) + c.Q1(a).scaled(c.L1(b)));
      vec_eq(rep, "(F2) line 2", {i, j}, c.Q2(c.P(a, b)),
             c.P(a, c.Q1(b) + c.Q2(b)) + c.Q2(a).scaled(c.L1(b) + c.L2(b)));
      vec_eq(rep, "(F2) line 3", {i, j}, c.Q2(c.S(a, b)),
             c.S(a, c.Q2(b)) + c.Q1(a).scaled(c.L2(b)));
      vec_eq(rep, "(F3) line 1", {i, j},
             c.S(c.P1(a) + c.P2(a), b) + c.P1(b).scaled(c.R1(a) + c.R2(a)), c.P1(c.S(a, b)));
      vec_eq(rep, "(F3) line 2", {i, j}, c.P(c.P2(a), b) + c.P2(b).scaled(c.R2(a)),
             c.P2(c.S(a, b) + c.P(a, b)));
      vec_eq(rep, "(F3) line 3", {i, j}, c.P(c.P1(a), b) + c.P2(b).scaled(c.R1(a)),
             c.P1(c.P(a, b)));
      vec_eq(rep, "(F4) line 1", {i, j},
             c.S(c.Q1(a) + c.Q2(a), b) + c.P1(b).scaled(c.L1(a) + c.L2(a)),
             c.S(a, c.P1(b)) + c.Q1(a).scaled(c.R1(b)));
      vec_eq(rep, "(F4) line 2", {i, j}, c.P(c.Q2(a), b) + c.P2(b).scaled(c.L2(a)),
             c.P(a, c.P1(b) + c.P2(b)) + c.Q2(a).scaled(c.R1(b) + c.R2(b)));
      vec_eq(rep, "(F4) line 3", {i, j}, c.P(c.Q1(a), b) + c.P2(b).scaled(c.L1(a)),
             c.S(a, c.P2(b)) + c.Q1(a).scaled(c.R2(b)));
      if (rep.fast_fail()) return;
    }
  for (int i = 0; i < c.n; ++i) {
    const Vec a = c.ud(i);
    vec_eq(rep, "(F5) line 1", {i},
           c.S(fd.a1 + fd.a2, a) + c.P1(a).scaled(fd.k1 + fd.k2),
           c.P1(c.P1(a)) + fd.a1.scaled(c.R1(a)));
    vec_eq(rep, "(F5) line 2", {i}, c.P(fd.a2, a) + c.P2(a).scaled(fd.k2),
           c.P2(c.P1(a) + c.P2(a)) + fd.a2.scaled(c.R1(a) + c.R2(a)));
    vec_eq(rep, "(F5) line 3", {i}, c.P(fd.a1, a) + c.P2(a).scaled(fd.k1),
           c.P1(c.P2(a)) + fd.a1.scaled(c.R2(a)));
    scalar_eq(rep, "(F6) line 1", {i}, fd.k2 * c.R1(a), c.R1(c.P1(a)));
    scalar_eq(rep, "(F6) line 2", {i}, c.R2(c.P1(a) + c.P2(a)) + fd.k2 * c.R1(a),
              Scalar::zero(fld));
    scalar_eq(rep, "(F6) line 3", {i}, c.R1(c.P2(a)), Scalar::zero(fld));
    vec_eq(rep, "(F7) line 1", {i},
           c.Q1(c.Q1(a) + c.Q2(a)) + fd.a1.scaled(c.L1(a) + c.L2(a)),
           c.S(a, fd.a1) + c.Q1(a).scaled(fd.k1));
    vec_eq(rep, "(F7) line 2", {i}, c.Q2(c.Q2(a)) + fd.a2.scaled(c.L2(a)),
           c.P(a, fd.a1 + fd.a2) + c.Q2(a).scaled(fd.k1 + fd.k2));
    vec_eq(rep, "(F7) line 3", {i}, c.Q2(c.Q1(a)) + fd.a2.scaled(c.L1(a)),
           c.S(a, fd.a2) + c.Q1(a).scaled(fd.k2));
    scalar_eq(rep, "(F8) line 1", {i}, c.L1(c.Q1(a) + c.Q2(a)) + c.L2(a) * fd.k1,
              Scalar::zero(fld));
    scalar_eq(rep, "(F8) line 2", {i}, c.L2(c.Q2(a)), c.L2(a) * fd.k1);
    scalar_eq(rep, "(F8) line 3", {i}, c.L2(c.Q1(a)), Scalar::zero(fld));
    vec_eq(rep, "(F9) line 1", {i},
           c.Q1(c.P1(a) + c.P2(a)) + fd.a1.scaled(c.R1(a) + c.R2(a)),
           c.P1(c.Q1(a)) + fd.a1.scaled(c.L1(a)));
    vec_eq(rep, "(F9) line 2", {i}, c.Q2(c.P2(a)) + fd.a2.scaled(c.R2(a)),
           c.P2(c.Q1(a) + c.Q2(a)) + fd.a2.scaled(c.L1(a) + c.L2(a)));
    vec_eq(rep, "(F9) line 3", {i}, c.Q2(c.P1(a)) + fd.a2.scaled(c.R1(a)),
           c.P1(c.Q2(a)) + fd.a1.scaled(c.L2(a)));
    scalar_eq(rep, "(F10) line 1", {i},
              c.L1(c.P1(a) + c.P2(a)) + (c.R1(a) + c.R2(a)) * fd.k1,
              c.R1(c.Q1(a)) + fd.k1 * c.L1(a));
    scalar_eq(rep, "(F10) line 2", {i}, c.L2(c.P2(a)) + c.R2(a) * fd.k2,
              c.R2(c.Q1(a) + c.Q2(a)) + fd.k2 * (c.L1(a) + c.L2(a)));
    scalar_eq(rep, "(F10) line 3", {i}, c.L2(c.P1(a)) + c.R1(a) * fd.k2,
              c.R1(c.Q2(a)) + fd.k1 * c.L2(a));
    if (rep.fast_fail()) return;
  }
  vec_eq(rep, "(F11) line 1", {}, c.Q1(fd.a1 + fd.a2) + fd.a1.scaled(fd.k2), c.P1(fd.a1));
  vec_eq(rep, "(F11) line 2", {}, c.Q2(fd.a2), c.P2(fd.a1 + fd.a2) + fd.a2.scaled(fd.k1));
  vec_eq(rep, "(F11) line 3", {}, c.Q2(fd.a1) + fd.a2.scaled(fd.k1),
         c.P1(fd.a2) + fd.a1.scaled(fd.k2));
  scalar_eq(rep, "(F12) line 1", {}, c.L1(fd.a1 + fd.a2) + fd.k2 * fd.k1, c.R1(fd.a1));
  scalar_eq(rep, "(F12) line 2", {}, c.L2(fd.a2), c.R2(fd.a1 + fd.a2) + fd.k2 * fd.k1);
  scalar_eq(rep, "(F12) line 3", {}, c.L2(fd.a1), c.R1(fd.a2));
}

}  // namespace

ValidationReport validate_flag(const FlagDatum& fd) {
  ValidationReport report;
  FlagChecker chk{&report};
  const FlagCtx c(fd);
  check_f1(c, chk);
  check_f2_f12(c, chk);
  return report;
}

ExtendingDatum flag_to_datum(const FlagDatum& fd) {
  const int n = fd.base.dim;
  ExtendingDatum w(fd.base, 1);
  for (int i = 0; i < n; ++i) {
    w.tr1.c(i, 0, 0) = fd.l1.at(0, i);
    w.tr2.c(i, 0, 0) = fd.l2.at(0, i);
    w.tl1.c(0, i, 0) = fd.r1.at(0, i);
    w.tl2.c(0, i, 0) = fd.r2.at(0, i);
    for (int k = 0; k < n; ++k) {
      w.rh1.c(0, i, k) = fd.p1.at(k, i);
      w.rh2.c(0, i, k) = fd.p2.at(k, i);
      w.lh1.c(i, 0, k) = fd.q1.at(k, i);
      w.lh2.c(i, 0, k) = fd.q2.at(k, i);
    }
  }
  for (int k = 0; k < n; ++k) {
    w.f1.c(0, 0, k) = fd.a1[k];
    w.f2.c(0, 0, k) = fd.a2[k];
  }
  w.sv.c(0, 0, 0) = fd.k1;
  w.pv.c(0, 0, 0) = fd.k2;
  return w;
}

FlagDatum datum_to_flag(const ExtendingDatum& w) {
  if (w.vdim != 1) throw WrongVDim("flag read-off needs vdim 1, got " + std::to_string(w.vdim));
  FlagDatum fd(w.base);
  const int n = w.base.dim;
  for (int i = 0; i < n; ++i) {
    fd.l1.at(0, i) = w.tr1.c(i, 0, 0);
    fd.l2.at(0, i) = w.tr2.c(i, 0, 0);
    fd.r1.at(0, i) = w.tl1.c(0, i, 0);
    fd.r2.at(0, i) = w.tl2.c(0, i, 0);
    for (int k = 0; k < n; ++k) {
      fd.p1.at(k, i) = w.rh1.c(0, i, k);
      fd.p2.at(k, i) = w.rh2.c(0, i, k);
      fd.q1.at(k, i) = w.lh1.c(i, 0, k);
      fd.q2.at(k, i) = w.lh2.c(i, 0, k);
    }
  }
  for (int k = 0; k < n; ++k) {
    fd.a1[k] = w.f1.c(0, 0, k);
    fd.a2[k] = w.f2.c(0, 0, k);
  }
  fd.k1 = w.sv.c(0, 0, 0);
  fd.k2 = w.pv.c(0, 0, 0);
  return fd;
}

FlagDatum flag_act(const FlagDatum& fd, const FlagWitness& w) {
  if (w.h0.is_zero()) throw ZeroH0("flag witness needs h0 != 0");
  if (w.g0.dim() != fd.base.dim) throw DimMismatch("witness g0 lives in the wrong space");
  const FieldSpec& fld = fd.base.field;
  const int n = fd.base.dim;
  const Scalar h = w.h0;
  const Vec& g = w.g0;
  const auto& S = fd.base.succ;
  const auto& P = fd.base.prec;

  FlagDatum out = fd;  // l and r are invariants of the action
  auto l_of = [&](const LinMap& l, const Vec& v) { return l.apply(v)[0]; };
  for (int i = 0; i < n; ++i) {
    const Vec a = Vec::unit(fld, n, i);
    out.p1.set_column(i, fd.p1.apply(a).scaled(h) - g.scaled(l_of(fd.r1, a)) + S.apply(g, a));
    out.p2.set_column(i, fd.p2.apply(a).scaled(h) - g.scaled(l_of(fd.r2, a)) + P.apply(g, a));
    out.q1.set_column(i, fd.q1.apply(a).scaled(h) - g.scaled(l_of(fd.l1, a)) + S.apply(a, g));
    out.q2.set_column(i, fd.q2.apply(a).scaled(h) - g.scaled(l_of(fd.l2, a)) + P.apply(a, g));
  }
  out.a1 = fd.a1.scaled(h * h) - g.scaled(h * fd.k1) + fd.q1.apply(g).scaled(h) -
           g.scaled(l_of(fd.l1, g)) + S.apply(g, g) + fd.p1.apply(g).scaled(h) -
           g.scaled(l_of(fd.r1, g));
  out.a2 = fd.a2.scaled(h * h) - g.scaled(h * fd.k2) + fd.q2.apply(g).scaled(h) -
           g.scaled(l_of(fd.l2, g)) + P.apply(g, g) + fd.p2.apply(g).scaled(h) -
           g.scaled(l_of(fd.r2, g));
  out.k1 = h * fd.k1 + l_of(fd.l1, g) + l_of(fd.r1, g);
  out.k2 = h * fd.k2 + l_of(fd.l2, g) + l_of(fd.r2, g);
  return out;
}

FlagWitness witness_compose(const FlagWitness& first, const FlagWitness& second) {
  return {second.g0 + first.g0.scaled(second.h0), second.h0 * first.h0};
}

FlagWitness witness_identity(const FieldSpec& f, int dim) {
  return {Vec(f, dim), Scalar::one(f)};
}

FlagWitness witness_inverse(const FlagWitness& w) {
  if (w.h0.is_zero()) throw ZeroH0("flag witness needs h0 != 0");
  const Scalar hinv = w.h0.inverse();
  return {(-w.g0).scaled(hinv), hinv};
}

Extension flag_to_extension(const FlagDatum& fd) {
  if (auto report = validate_flag(fd); !report.ok())
    throw InvalidFlag("not a flag datum; first failure: " + report.violations().front().str());
  return rebuild_extension(flag_to_datum(fd));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Writes odometer digits into the (p1, p2, q1, q2, a1, a2, k1, k2) block of
// an existing datum, in tuple order; the (l, r) head stays untouched.
void write_body_digits(FlagDatum& fd, const std::vector<long>& digits) {
  const FieldSpec& fld = fd.base.field;
  const int n = fd.base.dim;
  int idx = 0;
  for (LinMap* f : {&fd.p1, &fd.p2, &fd.q1, &fd.q2})
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) f->at(i, j) = Scalar::of(fld, digits[idx++]);
  for (Vec* v : {&fd.a1, &fd.a2})
    for (int i = 0; i < n; ++i) (*v)[i] = Scalar::of(fld, digits[idx++]);
  fd.k1 = Scalar::of(fld, digits[idx++]);
  fd.k2 = Scalar::of(fld, digits[idx++]);
}

}  // namespace

int FlagOrbits::find(const FlagDatum& fd) const {
  const std::string key = tuple_key(fd);
  for (size_t i = 0; i < valid.size(); ++i)
    if (tuple_key(valid[i]) == key) return static_cast<int>(i);
  return -1;
}

FlagOrbits classify_flags(const DendriformAlgebra& alg, const FieldSpec& field) {
  if (field.kind != FieldKind::PrimeField)
    throw InfiniteField("flag classification needs a finite field");
  if (alg.field != field) throw FieldMismatch("algebra is not over the classification field");
  if (auto r = check_dendriform(alg); !r.ok())
    throw InvalidInput("flag classification over an invalid algebra:\n" + r.str());

  const int n = alg.dim;
  const long p = field.p;
  const int head_params = 4 * n;
  const int body_params = 4 * n * n + 2 * n + 2;
  std::int64_t head_total = 1, body_total = 1;
  for (int i = 0; i < head_params; ++i) head_total *= p;
  for (int i = 0; i < body_params; ++i) body_total *= p;
  if (body_total > 200'000'000)
    throw Unsupported("flag search space too large for exhaustive classification");

  FlagOrbits out;

  // (F1) involves only the functionals; prune heads first.
  std::vector<FlagDatum> heads;
  for (std::int64_t hidx = 0; hidx < head_total; ++hidx) {
    FlagDatum head(alg);
    std::int64_t rest = hidx;
    std::vector<long> digits(head_params);
    for (int i = head_params - 1; i >= 0; --i) {
      digits[i] = static_cast<long>(rest % p);
      rest /= p;
    }
    int idx = 0;
    for (LinMap* f : {&head.l1, &head.l2, &head.r1, &head.r2})
      for (int i = 0; i < n; ++i) f->at(0, i) = Scalar::of(field, digits[idx++]);
    FlagChecker chk;
    const FlagCtx hc(head);
    check_f1(hc, chk);
    if (chk.ok) heads.push_back(std::move(head));
  }

  for (const FlagDatum& head : heads) {
    std::vector<std::vector<FlagDatum>> found(worker_count());
    parallel_chunks(body_total, [&](std::int64_t begin, std::int64_t end, int slot) {
      std::vector<long> digits(body_params);
      FlagDatum fd = head;  // mutated in place; copied out only when valid
      const FlagCtx fc(fd);
      for (std::int64_t idx = begin; idx < end; ++idx) {
        std::int64_t rest = idx;
        for (int i = body_params - 1; i >= 0; --i) {
          digits[i] = static_cast<long>(rest % p);
          rest /= p;
        }
        write_body_digits(fd, digits);
        FlagChecker chk;
        check_f2_f12(fc, chk);
        if (chk.ok) found[slot].push_back(fd);
      }
    });
    for (auto& chunk : found)
      for (auto& fd : chunk) out.valid.push_back(std::move(fd));
  }

  // Orbit closure under the witness action.
  std::map<std::string, int> index;
  for (size_t i = 0; i < out.valid.size(); ++i) index[tuple_key(out.valid[i])] = static_cast<int>(i);
  const int count = static_cast<int>(out.valid.size());
  UnionFind equiv(count), cohom(count);

  std::int64_t g_total = 1;
  for (int i = 0; i < n; ++i) g_total *= p;
  for (int i = 0; i < count; ++i) {
    for (std::int64_t gidx = 0; gidx < g_total; ++gidx) {
      Vec g0(field, n);
      std::int64_t rest = gidx;
      for (int k = n - 1; k >= 0; --k) {
        g0[k] = Scalar::of(field, static_cast<long>(rest % p));
        rest /= p;
      }
      for (long h = 1; h < p; ++h) {
        const FlagDatum image = flag_act(out.valid[i], {g0, Scalar::of(field, h)});
        auto it = index.find(tuple_key(image));
        if (it == index.end())
          throw Error("witness action left the enumerated valid set; enumeration is inconsistent");
        equiv.unite(i, it->second);
        if (h == 1) cohom.unite(i, it->second);
      }
    }
  }

  out.equiv_class.resize(count);
  out.cohom_class.resize(count);
  std::map<int, int> equiv_min, cohom_min;
  for (int i = 0; i < count; ++i) {
    const int re = equiv.find(i), rc = cohom.find(i);
    auto update = [&](std::map<int, int>& mins, int root) {
      auto [it, inserted] = mins.emplace(root, i);
      if (!inserted && tuple_cmp(out.valid[i], out.valid[it->second]) < 0) it->second = i;
    };
    update(equiv_min, re);
    update(cohom_min, rc);
  }
  std::map<int, int> equiv_id, cohom_id;
  for (const auto& [root, rep] : equiv_min) {
    equiv_id[root] = static_cast<int>(out.equiv_reps.size());
    out.equiv_reps.push_back(rep);
  }
  for (const auto& [root, rep] : cohom_min) {
    cohom_id[root] = static_cast<int>(out.cohom_reps.size());
    out.cohom_reps.push_back(rep);
  }
  for (int i = 0; i < count; ++i) {
    out.equiv_class[i] = equiv_id[equiv.find(i)];
    out.cohom_class[i] = cohom_id[cohom.find(i)];
  }
  return out;
}

}  // namespace dendrikit
