#include "dendrikit/serialization.hpp"

#include <json.hpp>

namespace dendrikit {

namespace {

using nlohmann::json;

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

const json& field_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_of(const json& j, const char* key) {
  const json& v = field_of(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

Scalar scalar_of(const json& v, const FieldSpec& f) {
  if (v.is_number_integer()) return Scalar::of(f, v.get<long>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    // Accept a leading minus over GF(p) in files even though the canonical
    // form is a plain residue.
    if (f.kind == FieldKind::PrimeField && !s.empty() && s[0] == '-')
      return -Scalar::parse(s.substr(1), f);
    return Scalar::parse(s, f);
  }
  throw ParseError("scalar must be a string or integer");
}

FieldSpec field_spec_of(const json& j) {
  const json& v = field_of(j, "field");
  if (!v.is_string()) throw ParseError("\"field\" must be a string");
  return FieldSpec::parse(v.get<std::string>());
}

json bilinear_to_json(const BilinearMap& b) {
  json c = json::array();
  for (int i = 0; i < b.left(); ++i) {
    json row = json::array();
    for (int j = 0; j < b.right(); ++j) {
      json cell = json::array();
      for (int k = 0; k < b.target(); ++k) cell.push_back(b.c(i, j, k).str());
      row.push_back(std::move(cell));
    }
    c.push_back(std::move(row));
  }
  return json{{"left", b.left()}, {"right", b.right()}, {"target", b.target()}, {"c", std::move(c)}};
}

BilinearMap bilinear_of(const json& j, const FieldSpec& f) {
  const int left = int_of(j, "left"), right = int_of(j, "right"), target = int_of(j, "target");
  if (left < 0 || right < 0 || target < 0) throw ParseError("negative bilinear map dimension");
  BilinearMap out(f, left, right, target);
  const json& c = field_of(j, "c");
  if (!c.is_array() || static_cast<int>(c.size()) != left)
    throw ParseError("\"c\" must have one row per left basis vector");
  for (int i = 0; i < left; ++i) {
    if (!c[i].is_array() || static_cast<int>(c[i].size()) != right)
      throw ParseError("bilinear tensor row length mismatch");
    for (int jj = 0; jj < right; ++jj) {
      if (!c[i][jj].is_array() || static_cast<int>(c[i][jj].size()) != target)
        throw ParseError("bilinear tensor cell length mismatch");
      for (int k = 0; k < target; ++k) out.c(i, jj, k) = scalar_of(c[i][jj][k], f);
    }
  }
  return out;
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (int i = 0; i < v.dim(); ++i) out.push_back(v[i].str());
  return out;
}

Vec vec_of(const json& j, const FieldSpec& f, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw ParseError("vector length mismatch");
  Vec out(f, dim);
  for (int i = 0; i < dim; ++i) out[i] = scalar_of(j[i], f);
  return out;
}

json matrix_to_json(const LinMap& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

LinMap matrix_of(const json& j, const FieldSpec& f, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw ParseError("matrix row count mismatch");
  LinMap out(f, rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
      throw ParseError("matrix column count mismatch");
    for (int c = 0; c < cols; ++c) out.at(r, c) = scalar_of(j[r][c], f);
  }
  return out;
}

json algebra_to_json_obj(const DendriformAlgebra& alg) {
  return json{{"field", alg.field.str()},
              {"dim", alg.dim},
              {"succ", bilinear_to_json(alg.succ)},
              {"prec", bilinear_to_json(alg.prec)}};
}

DendriformAlgebra algebra_of(const json& j, const FieldSpec& f) {
  // Inline object or the name of a built-in fixture.
  if (j.is_string()) {
    if (auto alg = named_algebra(j.get<std::string>(), f)) return *alg;
    throw ParseError("unknown algebra fixture \"" + j.get<std::string>() + "\"");
  }
  const int dim = int_of(j, "dim");
  if (dim < 0) throw ParseError("negative dimension");
  DendriformAlgebra alg(f, dim);
  const json& succ = field_of(j, "succ");
  const json& prec = field_of(j, "prec");
  alg.succ = bilinear_of(succ, f);
  alg.prec = bilinear_of(prec, f);
  if (alg.succ.left() != dim || alg.succ.right() != dim || alg.succ.target() != dim ||
      alg.prec.left() != dim || alg.prec.right() != dim || alg.prec.target() != dim)
    throw ParseError("product tensors do not match the declared dimension");
  return alg;
}

}  // namespace

std::string to_json(const DendriformAlgebra& alg, bool pretty) {
  return dump(algebra_to_json_obj(alg), pretty);
}

DendriformAlgebra algebra_from_json(const std::string& text) {
  const json j = parse(text);
  return algebra_of(j, field_spec_of(j));
}

std::string to_json(const InducedAlgebra& alg, bool pretty) {
  return dump(json{{"field", alg.field.str()},
                   {"dim", alg.dim},
                   {"kind", induced_kind_name(alg.kind)},
                   {"product", bilinear_to_json(alg.product)}},
              pretty);
}

std::string to_json(const DendriformBimodule& m, bool pretty) {
  return dump(json{{"field", m.base.field.str()},
                   {"base", algebra_to_json_obj(m.base)},
                   {"vdim", m.vdim},
                   {"tr1", bilinear_to_json(m.tr1)},
                   {"tr2", bilinear_to_json(m.tr2)},
                   {"tl1", bilinear_to_json(m.tl1)},
                   {"tl2", bilinear_to_json(m.tl2)}},
              pretty);
}

DendriformBimodule bimodule_from_json(const std::string& text) {
  const json j = parse(text);
  const FieldSpec f = field_spec_of(j);
  DendriformBimodule m(algebra_of(field_of(j, "base"), f), int_of(j, "vdim"));
  m.tr1 = bilinear_of(field_of(j, "tr1"), f);
  m.tr2 = bilinear_of(field_of(j, "tr2"), f);
  m.tl1 = bilinear_of(field_of(j, "tl1"), f);
  m.tl2 = bilinear_of(field_of(j, "tl2"), f);
  if (m.tr1.left() != m.base.dim || m.tr1.right() != m.vdim || m.tr1.target() != m.vdim ||
      m.tl1.left() != m.vdim || m.tl1.right() != m.base.dim || m.tl1.target() != m.vdim)
    throw ParseError("bimodule action shapes do not match base/vdim");
  return m;
}

std::string to_json(const ExtendingDatum& w, bool pretty) {
  json j{{"field", w.base.field.str()},
         {"base", algebra_to_json_obj(w.base)},
         {"vdim", w.vdim}};
  auto put = [&](const char* key, const BilinearMap& b) {
    if (!b.is_zero()) j[key] = bilinear_to_json(b);
  };
  put("tr1", w.tr1);
  put("tr2", w.tr2);
  put("tl1", w.tl1);
  put("tl2", w.tl2);
  put("rh1", w.rh1);
  put("rh2", w.rh2);
  put("lh1", w.lh1);
  put("lh2", w.lh2);
  put("f1", w.f1);
  put("f2", w.f2);
  put("sv", w.sv);
  put("pv", w.pv);
  return dump(j, pretty);
}

ExtendingDatum datum_from_json(const std::string& text) {
  const json j = parse(text);
  const FieldSpec f = field_spec_of(j);
  ExtendingDatum w(algebra_of(field_of(j, "base"), f), int_of(j, "vdim"));
  // Absent maps stay zero.
  auto get = [&](const char* key, BilinearMap& dest) {
    if (!j.contains(key)) return;
    BilinearMap b = bilinear_of(j.at(key), f);
    if (b.left() != dest.left() || b.right() != dest.right() || b.target() != dest.target())
      throw ParseError(std::string("datum map \"") + key + "\" has the wrong shape");
    dest = std::move(b);
  };
  get("tr1", w.tr1);
  get("tr2", w.tr2);
  get("tl1", w.tl1);
  get("tl2", w.tl2);
  get("rh1", w.rh1);
  get("rh2", w.rh2);
  get("lh1", w.lh1);
  get("lh2", w.lh2);
  get("f1", w.f1);
  get("f2", w.f2);
  get("sv", w.sv);
  get("pv", w.pv);
  return w;
}

std::string to_json(const FlagDatum& fd, bool pretty) {
  auto functional = [&](const LinMap& l) {
    json out = json::array();
    for (int i = 0; i < l.cols(); ++i) out.push_back(l.at(0, i).str());
    return out;
  };
  return dump(json{{"field", fd.base.field.str()},
                   {"base", algebra_to_json_obj(fd.base)},
                   {"l1", functional(fd.l1)},
                   {"l2", functional(fd.l2)},
                   {"r1", functional(fd.r1)},
                   {"r2", functional(fd.r2)},
                   {"p1", matrix_to_json(fd.p1)},
                   {"p2", matrix_to_json(fd.p2)},
                   {"q1", matrix_to_json(fd.q1)},
                   {"q2", matrix_to_json(fd.q2)},
                   {"a1", vec_to_json(fd.a1)},
                   {"a2", vec_to_json(fd.a2)},
                   {"k1", fd.k1.str()},
                   {"k2", fd.k2.str()}},
              pretty);
}

FlagDatum flag_from_json(const std::string& text) {
  const json j = parse(text);
  const FieldSpec f = field_spec_of(j);
  FlagDatum fd(algebra_of(field_of(j, "base"), f));
  const int n = fd.base.dim;
  auto functional = [&](const char* key, LinMap& dest) {
    const json& v = field_of(j, key);
    if (!v.is_array() || static_cast<int>(v.size()) != n)
      throw ParseError(std::string("functional \"") + key + "\" length mismatch");
    for (int i = 0; i < n; ++i) dest.at(0, i) = scalar_of(v[i], f);
  };
  functional("l1", fd.l1);
  functional("l2", fd.l2);
  functional("r1", fd.r1);
  functional("r2", fd.r2);
  fd.p1 = matrix_of(field_of(j, "p1"), f, n, n);
  fd.p2 = matrix_of(field_of(j, "p2"), f, n, n);
  fd.q1 = matrix_of(field_of(j, "q1"), f, n, n);
  fd.q2 = matrix_of(field_of(j, "q2"), f, n, n);
  fd.a1 = vec_of(field_of(j, "a1"), f, n);
  fd.a2 = vec_of(field_of(j, "a2"), f, n);
  fd.k1 = scalar_of(field_of(j, "k1"), f);
  fd.k2 = scalar_of(field_of(j, "k2"), f);
  return fd;
}

std::string to_json(const Extension& ext, bool pretty) {
  json j = algebra_to_json_obj(ext.total);
  j["subdim"] = ext.subdim;
  j["retraction"] = matrix_to_json(ext.retraction);
  return dump(j, pretty);
}

Extension extension_from_json(const std::string& text) {
  const json j = parse(text);
  const FieldSpec f = field_spec_of(j);
  DendriformAlgebra total = algebra_of(j, f);
  const int subdim = int_of(j, "subdim");
  if (subdim < 1 || subdim > total.dim) throw ParseError("subdim out of range");
  if (j.contains("retraction"))
    return make_extension(std::move(total), subdim,
                          matrix_of(j.at("retraction"), f, subdim, total.dim));
  return make_extension(std::move(total), subdim);
}

std::string to_json(const LinMap& map, bool pretty) {
  return dump(json{{"field", map.field().str()},
                   {"rows", map.rows()},
                   {"cols", map.cols()},
                   {"entries", matrix_to_json(map)}},
              pretty);
}

LinMap linmap_from_json(const std::string& text, const FieldSpec& field) {
  const json j = parse(text);
  FieldSpec f = field;
  if (j.contains("field")) f = field_spec_of(j);
  return matrix_of(field_of(j, "entries"), f, int_of(j, "rows"), int_of(j, "cols"));
}

}  // namespace dendrikit
