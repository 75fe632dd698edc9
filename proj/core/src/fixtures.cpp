#include "dendrikit/fixtures.hpp"

namespace dendrikit::fixtures {

namespace {

Scalar half_of(const FieldSpec& f) { return Scalar::fraction(f, 1, 2); }

std::array<Scalar, 12> tuple_of_ints(const FieldSpec& f, const std::array<long, 12>& t) {
  std::array<Scalar, 12> out{Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f),
                             Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f),
                             Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
  for (int i = 0; i < 12; ++i) out[i] = Scalar::of(f, t[i]);
  return out;
}

}  // namespace

const std::vector<std::array<long, 4>>& bimodule_rows() {
  // The complete solution set of the one-dimensional module equations over
  // exD; brute force over the 4-parameter grid recovers exactly these eight.
  static const std::vector<std::array<long, 4>> rows = {
      {1, -1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}, {1, 0, 0, 1},
      {1, -1, 0, 1}, {1, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0},
  };
  return rows;
}

DendriformBimodule bimodule_row(const FieldSpec& f, const std::array<long, 4>& row) {
  DendriformBimodule m(example_d(f), 1);
  m.tr1.c(0, 0, 0) = Scalar::of(f, row[0]);
  m.tr2.c(0, 0, 0) = Scalar::of(f, row[1]);
  m.tl1.c(0, 0, 0) = Scalar::of(f, row[2]);
  m.tl2.c(0, 0, 0) = Scalar::of(f, row[3]);
  return m;
}

FlagDatum flag_from_tuple(const FieldSpec& f, const std::array<Scalar, 12>& t) {
  FlagDatum fd(example_d(f));
  fd.l1.at(0, 0) = t[0];
  fd.l2.at(0, 0) = t[1];
  fd.r1.at(0, 0) = t[2];
  fd.r2.at(0, 0) = t[3];
  fd.p1.at(0, 0) = t[4];
  fd.p2.at(0, 0) = t[5];
  fd.q1.at(0, 0) = t[6];
  fd.q2.at(0, 0) = t[7];
  fd.a1[0] = t[8];
  fd.a2[0] = t[9];
  fd.k1 = t[10];
  fd.k2 = t[11];
  return fd;
}

FlagDatum flag_from_ints(const FieldSpec& f, const std::array<long, 12>& t) {
  return flag_from_tuple(f, tuple_of_ints(f, t));
}

const std::vector<FlagFamilyCase>& flag_family_cases() {
  static const std::vector<FlagFamilyCase> cases = {
      {1, 1, false, false},  {2, 2, false, true},  {3, 1, false, false}, {4, 1, false, false},
      {5, 1, false, false},  {6, 1, false, false}, {7, 2, true, false},  {8, 1, false, false},
      {9, 2, false, true},   {10, 2, false, true}, {11, 1, false, false}, {12, 1, false, false},
      {13, 2, false, true},  {14, 2, false, true}, {15, 2, false, true},  {16, 2, false, true},
  };
  return cases;
}

FlagDatum flag_family(const FieldSpec& f, int id, const Scalar& u, const Scalar& v) {
  const Scalar z = Scalar::zero(f), one = Scalar::one(f);
  const Scalar uu = u * u, uv = u * v;
  // Only the two families with forced quadratic cocycles divide by four,
  // so the division must not run for the others (GF(2) has no 1/4).
  auto quarter_of = [&] { return half_of(f) * half_of(f); };
  switch (id) {
    case 1:
      return flag_from_tuple(f, {one, -one, z, z, u, z, z, u, z, uu, u, -u});
    case 2:
      return flag_from_tuple(f, {one, -one, z, z, u, z, z, u, z, uu - uv, u, v - u});
    case 3:
      return flag_from_tuple(f, {z, z, one, z, z, z, u, z, z, z, u, z});
    case 4:
      return flag_from_tuple(f, {z, z, z, one, u, -u, u, z, uu, -uu, z, u});
    case 5:
      return flag_from_tuple(f, {one, z, z, z, u, z, z, z, z, z, u, z});
    case 6:
      return flag_from_tuple(f, {one, z, one, z, z, z, z, z, -(uu * quarter_of()), z, u, z});
    case 7:
      return flag_from_tuple(f, {one, z, one, z, z, z, z, z, u - v * v * quarter_of(), z, v, z});
    case 8:
      return flag_from_tuple(f, {one, z, z, one, u, -u, z, z, z, -uu, u, u});
    case 9:
      return flag_from_tuple(f, {one, z, z, one, u, -u, z, z, z, -uv - uu, u, v + u});
    case 10:
      return flag_from_tuple(f, {one, z, z, one, u, -u, z, z, -uv, -uu, v + u, u});
    case 11:
      return flag_from_tuple(f, {one, -one, z, one, u, -u, z, u, z, z, u, z});
    case 12:
      return flag_from_tuple(f, {z, z, z, z, u, z, u, z, uu, z, z, z});
    case 13:
      return flag_from_tuple(f, {z, z, z, z, u, z, u, z, u * (u - v), z, v, z});
    case 14:
      return flag_from_tuple(f, {z, z, z, z, u + v, z, u, v, uu, uv, v, z});
    case 15:
      return flag_from_tuple(f, {z, z, z, z, u, z, u, z, uu, -uv, z, v});
    case 16:
      return flag_from_tuple(f, {z, z, z, z, u + v, z, u, v, uu + uv, z, z, v});
    default:
      throw InvalidInput("flag family id out of range: " + std::to_string(id));
  }
}

namespace {

FlagWitness scalar_witness(const FieldSpec& f, const Scalar& g0, const Scalar& h0) {
  Vec g(f, 1);
  g[0] = g0;
  return {g, h0};
}

}  // namespace

std::optional<FlagWitness> flag_family_witness(const FieldSpec& f, int id, const Scalar& u,
                                               const Scalar& v) {
  const Scalar one = Scalar::one(f);
  switch (id) {
    case 2:
    case 9:
    case 10:
    case 13:
    case 14:
    case 15:
    case 16:
      return scalar_witness(f, -(u / v), one / v);
    case 6:
      return scalar_witness(f, -(u * half_of(f)), one);
    case 7: {
      const auto root = u.sqrt();
      if (!root || root->is_zero()) return std::nullopt;
      return scalar_witness(f, -(v * half_of(f) / *root), one / *root);
    }
    default:
      return scalar_witness(f, -u, one);
  }
}

FlagWitness flag_family_cohom_witness(const FieldSpec& f, int id, const Scalar& u,
                                      const Scalar& v) {
  const Scalar one = Scalar::one(f);
  switch (id) {
    case 6:
      return scalar_witness(f, -(u * half_of(f)), one);
    case 7:
      return scalar_witness(f, -(v * half_of(f)), one);
    default:
      (void)v;
      return scalar_witness(f, -u, one);
  }
}

FlagDatum flag_family_equiv_rep(const FieldSpec& f, int id) {
  // Constant representative tuples: for each family, the tuple its
  // classifying witness reaches. Each is itself a valid flag datum.
  static const std::array<std::array<long, 12>, 16> reps = {{
      {1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
      {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0},
      {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1},
      {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0},
      {1, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
      {0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
      {0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1},
  }};
  if (id < 1 || id > 16) throw InvalidInput("flag family id out of range");
  return flag_from_ints(f, reps[id - 1]);
}

FlagDatum flag_family_cohom_rep(const FieldSpec& f, int id, const Scalar& u, const Scalar& v) {
  const Scalar z = Scalar::zero(f), one = Scalar::one(f);
  switch (id) {
    case 2:
      return flag_from_tuple(f, {one, -one, z, z, z, z, z, z, z, z, z, v});
    case 7:
      return flag_from_tuple(f, {one, z, one, z, z, z, z, z, u, z, z, z});
    case 9:
      return flag_from_tuple(f, {one, z, z, one, z, z, z, z, z, z, z, v});
    case 10:
      return flag_from_tuple(f, {one, z, z, one, z, z, z, z, z, z, v, z});
    case 13:
      return flag_from_tuple(f, {z, z, z, z, z, z, z, z, z, z, v, z});
    case 14:
      return flag_from_tuple(f, {z, z, z, z, v, z, z, v, z, z, v, z});
    case 15:
      return flag_from_tuple(f, {z, z, z, z, z, z, z, z, z, z, z, v});
    case 16:
      return flag_from_tuple(f, {z, z, z, z, v, z, z, v, z, z, z, v});
    default:
      return flag_family_equiv_rep(f, id);
  }
}

const std::vector<std::array<long, 8>>& matched_pair_rows_exd() {
  static const std::vector<std::array<long, 8>> rows = {
      {1, -1, 0, 0, 1, 0, 0, 1}, {0, 0, 1, 0, 0, 0, 1, 0}, {1, 0, 0, 0, 1, 0, 0, 0},
      {1, 0, 0, 1, 1, -1, 0, 0}, {1, -1, 0, 1, 1, -1, 0, 1}, {0, 0, 0, 0, 1, 0, 1, 0},
      {0, 0, 0, 0, 1, 0, 0, 1},  {1, 0, 1, 0, 0, 0, 0, 0},  {1, 0, 0, 1, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
  };
  return rows;
}

const std::vector<std::array<long, 8>>& matched_pair_rows_exb() {
  static const std::vector<std::array<long, 8>> rows = {
      {1, -1, 0, 0, 0, 0, 0, 0},
      {1, 0, 0, 1, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0},
  };
  return rows;
}

ExtendingDatum matched_pair_datum(const FieldSpec& f, const std::array<long, 8>& actions,
                                  bool v_is_exd) {
  std::array<long, 12> t{};
  for (int i = 0; i < 8; ++i) t[i] = actions[i];
  t[8] = t[9] = 0;
  t[10] = v_is_exd ? 1 : 0;
  t[11] = v_is_exd ? 0 : 1;
  return flag_to_datum(flag_from_ints(f, t));
}

ExtendingDatum cocycle_example(const FieldSpec& f) {
  ExtendingDatum w(example_d(f), 1);
  w.tr1.c(0, 0, 0) = Scalar::one(f);
  w.tl1.c(0, 0, 0) = Scalar::one(f);
  w.f1.c(0, 0, 0) = Scalar::one(f);
  w.sv.c(0, 0, 0) = Scalar::of(f, 2);
  return w;
}

DeformationExpectation deformation_case(const FieldSpec& f, int id, const Scalar& u,
                                        const Scalar& v) {
  DeformationExpectation out;
  const Scalar one = Scalar::one(f);
  // A second-class sample for the all-values cases: any d != -u; shift by one
  // more when 1 - u collides with -u.
  const Scalar sample = (one - u == -u) ? Scalar::of(f, 2) - u : one - u;
  switch (id) {
    case 1:
    case 4:
    case 12:
    case 14:
    case 15:
      out.ds = {-u};
      out.expected_index = 1;
      break;
    case 2:
      out.ds = {-u, v - u};
      out.expected_index = 2;
      break;
    case 3:
    case 5:
    case 11:
      out.ds = {-u, sample};
      out.equiv_checks = {{sample, one - u, sample + u}};
      out.expected_index = 2;
      break;
    case 6:
      out.ds = {-(u * half_of(f))};
      out.expected_index = 1;
      break;
    case 7: {
      const auto root = u.sqrt();
      if (!root) {
        out.requires_field_extension = true;
        out.expected_index = 1;
        break;
      }
      const Scalar base = -(v * half_of(f));
      out.ds = {base + *root, base - *root};
      out.equiv_checks = {{base + *root, base - *root, -one}};
      out.expected_index = 1;
      break;
    }
    case 8:
    case 10:
      out.ds = {-u};
      out.expected_index = 1;
      break;
    case 9:
      out.ds = {-u, -v - u};
      out.expected_index = 2;
      break;
    case 13:
      out.ds = {-u, v - u};
      out.equiv_checks = {{-u, v - u, one}};
      out.expected_index = 1;
      break;
    case 16:
      out.ds = {-u, -u - v};
      out.equiv_checks = {{-u, -u - v, one}};
      out.expected_index = 1;
      break;
    default:
      throw InvalidInput("deformation case id out of range: " + std::to_string(id));
  }
  return out;
}

}  // namespace dendrikit::fixtures
