#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include <dendrikit/dendrikit.hpp>

namespace dendrikit::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

DendriformAlgebra load_algebra(const std::string& arg, const FieldSpec& field) {
  if (auto alg = named_algebra(arg, field)) return *alg;
  return algebra_from_json(read_file(arg));
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text << '\n';
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw Error("cannot write \"" + out_path + "\"");
  f << text << '\n';
}

std::string tuple_str(const FlagDatum& fd) {
  std::string s = "(";
  bool first = true;
  for (const auto& v : fd.tuple()) {
    if (!first) s += ",";
    s += v.str();
    first = false;
  }
  return s + ")";
}

// ---- check ----------------------------------------------------------------

int cmd_check(const std::string& path, const std::string& what, std::ostream& out) {
  const std::string text = read_file(path);
  ValidationReport report;
  if (what == "dendriform") {
    report = check_dendriform(algebra_from_json(text));
  } else if (what == "bimodule") {
    report = check_bimodule(bimodule_from_json(text));
  } else if (what == "datum") {
    report = validate_datum(datum_from_json(text));
  } else if (what == "matched-pair") {
    report = validate_matched_pair(datum_from_json(text));
  } else if (what == "cocycle-system") {
    report = validate_cocycle_system(datum_from_json(text));
  } else if (what == "nonabelian-system") {
    report = validate_nonabelian_system(datum_from_json(text));
  } else if (what == "flag") {
    report = validate_flag(flag_from_json(text));
  } else if (what == "extension") {
    report = check_extension(extension_from_json(text));
  } else {
    throw ParseError("unknown object kind \"" + what + "\"");
  }
  if (report.ok()) {
    out << "valid\n";
    return 0;
  }
  out << report.str();
  return 1;
}

// ---- tables ---------------------------------------------------------------

struct RowStatus {
  std::string label;
  bool verified = false;
  std::string note;
};

void print_rows(const std::vector<RowStatus>& rows, std::ostream& out) {
  for (const auto& r : rows) {
    out << r.label << ": " << (r.verified ? "VERIFIED" : "FAILED");
    if (!r.note.empty()) out << " (" << r.note << ")";
    out << '\n';
  }
}

std::vector<RowStatus> table_bimodules(const FieldSpec& field) {
  std::vector<RowStatus> rows;
  int idx = 0;
  for (const auto& row : fixtures::bimodule_rows()) {
    RowStatus st;
    st.label = "table 1 row " + std::to_string(++idx) + " (" + std::to_string(row[0]) + "," +
               std::to_string(row[1]) + "," + std::to_string(row[2]) + "," +
               std::to_string(row[3]) + ")";
    st.verified = check_bimodule(fixtures::bimodule_row(field, row)).ok();
    rows.push_back(std::move(st));
  }
  return rows;
}

std::vector<RowStatus> table_flag_classes(const FieldSpec& field) {
  std::vector<RowStatus> rows;
  const Scalar one = Scalar::one(field);
  for (const auto& cs : fixtures::flag_family_cases()) {
    RowStatus st;
    st.label = "table 2 case " + std::to_string(cs.id);
    st.verified = true;
    try {
      const FlagDatum fd = fixtures::flag_family(field, cs.id, one, one);
      bool ok = validate_flag(fd).ok();
      const auto witness = fixtures::flag_family_witness(field, cs.id, one, one);
      if (witness) {
        ok = ok && flag_act(fd, *witness) == fixtures::flag_family_equiv_rep(field, cs.id);
      } else {
        st.note = "equivalence witness requires field extension";
      }
      const FlagDatum crep =
          flag_act(fd, fixtures::flag_family_cohom_witness(field, cs.id, one, one));
      ok = ok && crep == fixtures::flag_family_cohom_rep(field, cs.id, one, one);
      ok = ok && validate_flag(fixtures::flag_family_equiv_rep(field, cs.id)).ok();
      st.verified = ok;
    } catch (const DivisionByZero&) {
      st.note = "not instantiable over " + field.str();
    }
    rows.push_back(std::move(st));
  }
  return rows;
}

std::vector<RowStatus> table_matched_pairs(int which, const FieldSpec& field) {
  const bool exd = which == 3;
  const auto& data = exd ? fixtures::matched_pair_rows_exd() : fixtures::matched_pair_rows_exb();
  std::vector<RowStatus> rows;
  int idx = 0;
  for (const auto& actions : data) {
    RowStatus st;
    st.label = "table " + std::to_string(which) + " row " + std::to_string(++idx);
    const ExtendingDatum mp = fixtures::matched_pair_datum(field, actions, exd);
    bool ok = validate_matched_pair(mp).ok();
    if (ok) {
      const ProductAlgebra product = bicrossed_product(mp);
      ok = check_dendriform(product.algebra).ok();
      if (ok) {
        const auto refound = detect_factorization(rebuild_extension(mp));
        ok = refound.has_value() && *refound == mp;
      }
    }
    st.verified = ok;
    rows.push_back(std::move(st));
  }
  return rows;
}

std::vector<RowStatus> table_deformations(const FieldSpec& field) {
  std::vector<RowStatus> rows;
  const FieldSpec gf3 = FieldSpec::gf(3);
  for (const auto& cs : fixtures::flag_family_cases()) {
    RowStatus st;
    st.label = "table 5 case " + std::to_string(cs.id);
    bool ok = true;
    try {
      const Scalar one = Scalar::one(field);
      const ExtendingDatum w = flag_to_datum(fixtures::flag_family(field, cs.id, one, one));
      const auto expect = fixtures::deformation_case(field, cs.id, one, one);
      if (expect.requires_field_extension) {
        st.note = "deformation values require field extension";
      } else {
        for (const auto& dval : expect.ds) {
          LinMap d(field, 1, 1);
          d.at(0, 0) = dval;
          ok = ok && validate_deformation(w, d).ok();
        }
        for (const auto& ec : expect.equiv_checks) {
          LinMap d(field, 1, 1), dp(field, 1, 1), delta(field, 1, 1);
          d.at(0, 0) = ec.d;
          dp.at(0, 0) = ec.dprime;
          delta.at(0, 0) = ec.delta;
          ok = ok && check_deformation_equivalence(w, d, dp, delta).ok();
        }
      }
      // The complement count is a finite-field computation; GF(3) throughout.
      const Scalar one3 = Scalar::one(gf3);
      const Extension ext3 = flag_to_extension(fixtures::flag_family(gf3, cs.id, one3, one3));
      const auto classes = enumerate_complements(ext3, gf3);
      const auto expect3 = fixtures::deformation_case(gf3, cs.id, one3, one3);
      ok = ok && classes.index == expect3.expected_index;
      st.note += (st.note.empty() ? "" : "; ");
      st.note += "[E:D] = " + std::to_string(classes.index) + " over gf:3";
    } catch (const DivisionByZero&) {
      st.note = "not instantiable over " + field.str();
    }
    st.verified = ok;
    rows.push_back(std::move(st));
  }
  return rows;
}

int cmd_tables(int which, const FieldSpec& field, std::ostream& out) {
  if (which < 1 || which > 5) throw UnknownTable("no table " + std::to_string(which));
  std::vector<RowStatus> rows;
  switch (which) {
    case 1: rows = table_bimodules(field); break;
    case 2: rows = table_flag_classes(field); break;
    case 3: rows = table_matched_pairs(3, field); break;
    case 4: rows = table_matched_pairs(4, field); break;
    case 5: rows = table_deformations(field); break;
  }
  print_rows(rows, out);
  for (const auto& r : rows)
    if (!r.verified) return 1;
  return 0;
}

// ---- product / extract / derive / deform ----------------------------------

int cmd_product(const std::string& path, const std::string& kind, const std::string& out_path,
                bool pretty, std::ostream& out) {
  const ExtendingDatum w = datum_from_json(read_file(path));
  ProductAlgebra product = [&] {
    if (kind == "unified") return unified_product(w);
    if (kind == "bicrossed") return bicrossed_product(w);
    if (kind == "cocycle") return cocycle_product(w);
    if (kind == "nonabelian") return nonabelian_product(w);
    if (kind == "abelian") return abelian_semidirect(w.bimodule_part());
    if (kind == "direct-sum") return direct_sum_product(w.base, w.v_algebra());
    throw ParseError("unknown product kind \"" + kind + "\"");
  }();
  emit(to_json(product.algebra, pretty), out_path, out);
  return 0;
}

int cmd_extract(const std::string& path, const std::string& out_path, bool pretty,
                std::ostream& out) {
  const Extension ext = extension_from_json(read_file(path));
  emit(to_json(extract_datum(ext), pretty), out_path, out);
  return 0;
}

int cmd_derive(const std::string& path, const std::string& to, const FieldSpec& field,
               const std::string& out_path, bool pretty, std::ostream& out) {
  const DendriformAlgebra alg = load_algebra(path, field);
  InducedKind kind;
  if (to == "associative") kind = InducedKind::Associative;
  else if (to == "prelie") kind = InducedKind::PreLie;
  else if (to == "lie") kind = InducedKind::Lie;
  else throw ParseError("unknown derivation target \"" + to + "\"");
  emit(to_json(induce(alg, kind), pretty), out_path, out);
  return 0;
}

int cmd_deform(const std::string& path, const std::string& dpath, const std::string& out_path,
               bool pretty, std::ostream& out) {
  const ExtendingDatum w = datum_from_json(read_file(path));
  const LinMap d = linmap_from_json(read_file(dpath), w.base.field);
  const auto report = validate_deformation(w, d);
  if (!report.ok()) {
    out << report.str();
    return 1;
  }
  emit(to_json(deform(w, d), pretty), out_path, out);
  return 0;
}

// ---- classify-flag / complements -------------------------------------------

int cmd_classify_flag(const std::string& algebra, const FieldSpec& field, bool orbits,
                      bool as_json, bool pretty, const std::string& out_path, std::ostream& out) {
  const DendriformAlgebra alg = load_algebra(algebra, field);
  const FlagOrbits result = classify_flags(alg, field);
  if (as_json) {
    json j{{"field", field.str()},
           {"valid", result.valid.size()},
           {"equiv_orbits", result.equiv_reps.size()},
           {"cohom_orbits", result.cohom_reps.size()}};
    if (orbits) {
      json orbit_list = json::array();
      for (size_t k = 0; k < result.equiv_reps.size(); ++k) {
        json members = json::array();
        for (size_t i = 0; i < result.valid.size(); ++i)
          if (result.equiv_class[i] == static_cast<int>(k))
            members.push_back(tuple_str(result.valid[i]));
        orbit_list.push_back(json{{"representative", tuple_str(result.valid[result.equiv_reps[k]])},
                                  {"members", std::move(members)}});
      }
      j["orbits"] = std::move(orbit_list);
    }
    emit(pretty ? j.dump(2) : j.dump(), out_path, out);
    return 0;
  }
  std::ostringstream text;
  text << "valid flag datums: " << result.valid.size() << '\n'
       << "equivalence orbits: " << result.equiv_reps.size() << '\n'
       << "cohomologous orbits: " << result.cohom_reps.size() << '\n';
  if (orbits)
    for (size_t k = 0; k < result.equiv_reps.size(); ++k) {
      int size = 0;
      for (int cls : result.equiv_class)
        if (cls == static_cast<int>(k)) ++size;
      text << "orbit " << k << " (size " << size
           << "): " << tuple_str(result.valid[result.equiv_reps[k]]) << '\n';
    }
  emit(text.str(), out_path, out);
  return 0;
}

int cmd_complements(const std::string& path, const FieldSpec& field, bool pretty,
                    const std::string& out_path, std::ostream& out) {
  const Extension ext = extension_from_json(read_file(path));
  const auto classes = enumerate_complements(ext, field);
  json deformations = json::array();
  for (size_t i = 0; i < classes.deformations.size(); ++i) {
    json entry = json::parse(to_json(classes.deformations[i]));
    entry["class"] = classes.cls[i];
    entry["complement_basis"] = json::parse(to_json(classes.complements[i].basis)).at("entries");
    deformations.push_back(std::move(entry));
  }
  json reps = json::array();
  for (int rep : classes.class_reps)
    reps.push_back(json::parse(to_json(classes.deformations[rep])).at("entries"));
  json j{{"field", field.str()},
         {"index", classes.index},
         {"deformations", std::move(deformations)},
         {"class_representatives", std::move(reps)}};
  emit(pretty ? j.dump(2) : j.dump(), out_path, out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"dendrikit: exact computations with finite-dimensional dendriform algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand name

  std::string field_text = "q";
  app.add_option("--field", field_text, "coefficient field: q or gf:p")->capture_default_str();

  std::string path, what = "dendriform", kind = "unified", to = "lie", dpath, out_path, algebra;
  int which = 0;
  bool orbits = false, as_json = false, pretty = false;

  auto* check = app.add_subcommand("check", "validate an object file");
  check->add_option("file", path)->required();
  check->add_option("--what", what,
                    "dendriform | bimodule | datum | matched-pair | cocycle-system | "
                    "nonabelian-system | flag | extension")
      ->required();

  auto* tables = app.add_subcommand("tables", "regenerate and verify the classified tables");
  tables->add_option("--which", which, "table number 1..5")->required();

  auto* product = app.add_subcommand("product", "build a product algebra from a datum");
  product->add_option("file", path)->required();
  product->add_option("--kind", kind,
                      "unified | bicrossed | cocycle | nonabelian | abelian | direct-sum");
  product->add_option("--out", out_path);
  product->add_flag("--pretty", pretty);

  auto* extract = app.add_subcommand("extract", "read the extending datum off an extension");
  extract->add_option("file", path)->required();
  extract->add_option("--out", out_path);
  extract->add_flag("--pretty", pretty);

  auto* derive = app.add_subcommand("derive", "induced associative/prelie/lie algebra");
  derive->add_option("file", path)->required();
  derive->add_option("--to", to, "associative | prelie | lie")->required();
  derive->add_option("--out", out_path);
  derive->add_flag("--pretty", pretty);

  auto* deform = app.add_subcommand("deform", "deform the V part of a datum by a map");
  deform->add_option("file", path)->required();
  deform->add_option("--d", dpath, "deformation map JSON")->required();
  deform->add_option("--out", out_path);
  deform->add_flag("--pretty", pretty);

  auto* classify = app.add_subcommand("classify-flag", "enumerate and classify flag datums");
  classify->add_option("--algebra", algebra, "fixture name or algebra file")->required();
  classify->add_flag("--orbits", orbits, "list orbits");
  classify->add_flag("--json", as_json);
  classify->add_flag("--pretty", pretty);
  classify->add_option("--out", out_path);

  auto* complements = app.add_subcommand("complements", "classify complements of an extension");
  complements->add_option("file", path)->required();
  complements->add_flag("--pretty", pretty);
  complements->add_option("--out", out_path);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const FieldSpec field = FieldSpec::parse(field_text);
    if (check->parsed()) return cmd_check(path, what, out);
    if (tables->parsed()) return cmd_tables(which, field, out);
    if (product->parsed()) return cmd_product(path, kind, out_path, pretty, out);
    if (extract->parsed()) return cmd_extract(path, out_path, pretty, out);
    if (derive->parsed()) return cmd_derive(path, to, field, out_path, pretty, out);
    if (deform->parsed()) return cmd_deform(path, dpath, out_path, pretty, out);
    if (classify->parsed())
      return cmd_classify_flag(algebra, field, orbits, as_json, pretty, out_path, out);
    if (complements->parsed()) return cmd_complements(path, field, pretty, out_path, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidField& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DenominatorZero& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UnknownTable& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace dendrikit::cli
