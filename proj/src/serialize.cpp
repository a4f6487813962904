#include "phinlab/serialize.hpp"

#include <fstream>
#include <sstream>

#include "phinlab/error.hpp"

namespace phinlab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) bad(std::string("field '") + key + "' must be an array");
  return v;
}

void expect_kind(const Json& j, const char* kind) {
  if (j.is_object() && j.contains("schema") && j.at("schema") != kSchema) bad("unsupported schema");
  if (j.is_object() && j.contains("kind") && j.at("kind") != kind) bad(std::string("expected kind '") + kind + "'");
}

std::vector<Vec> rows_from_json(const Json& j, int cols) {
  if (!j.is_array()) bad("basis must be a list of rows");
  std::vector<Vec> rows;
  for (const auto& r : j) {
    Vec v = scalars_from_json(r);
    if (static_cast<int>(v.size()) != cols) throw Error(ErrorKind::ValidationError, "basis row has the wrong length");
    rows.push_back(std::move(v));
  }
  return rows;
}

Json subspace_to_json(const Subspace& s) {
  Json rows = Json::array();
  for (const auto& v : s.basis()) rows.push_back(to_json(v));
  return rows;
}

}  // namespace

Json to_json(const Scalar& x) { return format_scalar(x); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return parse_scalar(std::to_string(j.get<long long>()));
  bad("scalar must be a \"num/den\" string or an integer");
}

Json to_json(const std::vector<Scalar>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

std::vector<Scalar> scalars_from_json(const Json& j) {
  if (!j.is_array()) bad("expected a list of scalars");
  std::vector<Scalar> out;
  for (const auto& x : j) out.push_back(scalar_from_json(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (int i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Matrix matrix_from_json(const Json& j, int rows, int cols) {
  if (!j.is_array()) bad("matrix must be a list of rows");
  if (static_cast<int>(j.size()) != rows) throw Error(ErrorKind::ValidationError, "violated invariant: shape (matrix row count)");
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Vec r = scalars_from_json(j[i]);
    if (static_cast<int>(r.size()) != cols) throw Error(ErrorKind::ValidationError, "violated invariant: shape (matrix column count)");
    for (int k = 0; k < cols; ++k) m(i, k) = r[k];
  }
  return m;
}

Json to_json(const SemilinearScalar& x) { return to_json(x.components()); }

Json to_json(const DualScalar& x) { return Json{{"a", to_json(x.a)}, {"b", to_json(x.b)}}; }

Json to_json(const FieldContext& ctx) { return Json{{"p", ctx.p()}, {"e", ctx.e()}, {"f", ctx.f()}}; }

FieldContext context_from_json(const Json& j) {
  const Json& c = field(j, "ctx");
  const Json& p = field(c, "p");
  if (!p.is_number_integer()) bad("ctx.p must be an integer");
  return FieldContext::make(p.get<long>(), int_field(c, "e"), int_field(c, "f"));
}

Json module_to_json(const FilteredPhiNModule& d, const std::vector<Refinement>& refinements) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "module";
  j["ctx"] = to_json(d.ctx);
  j["n"] = d.n;
  j["phi"] = Json::array();
  j["N"] = Json::array();
  for (int c = 0; c < d.f(); ++c) {
    j["phi"].push_back(to_json(d.phi[c]));
    j["N"].push_back(to_json(d.N[c]));
  }
  j["filtration"] = Json::array();
  for (const auto& fil : d.filtration) {
    Json steps = Json::array();
    for (const auto& s : fil) steps.push_back(Json{{"jump", s.jump}, {"basis", subspace_to_json(s.space)}});
    j["filtration"].push_back(steps);
  }
  j["refinements"] = Json::array();
  for (const auto& r : refinements) {
    Json flag = Json::array();
    for (int i = 1; i <= r.n(); ++i) {
      Json step = Json::array();
      for (const auto& comp : r.flag[i]) step.push_back(subspace_to_json(comp));
      flag.push_back(step);
    }
    j["refinements"].push_back(Json{{"flag", flag}});
  }
  return j;
}

ModuleFile module_from_json(const Json& j) {
  if (!j.is_object()) bad("module description must be a JSON object");
  expect_kind(j, "module");
  ModuleFile out;
  FilteredPhiNModule& d = out.module;
  d.ctx = context_from_json(j);
  d.n = int_field(j, "n");
  if (d.n < 0) bad("n must be non-negative");
  const Json& phi = array_field(j, "phi");
  const Json& nm = array_field(j, "N");
  if (static_cast<int>(phi.size()) != d.f() || static_cast<int>(nm.size()) != d.f())
    throw Error(ErrorKind::ValidationError, "violated invariant: shape (need f matrices)");
  for (int c = 0; c < d.f(); ++c) {
    d.phi.push_back(matrix_from_json(phi[c], d.n, d.n));
    d.N.push_back(matrix_from_json(nm[c], d.n, d.n));
  }
  const Json& fil = array_field(j, "filtration");
  if (static_cast<int>(fil.size()) != d.ctx.degree())
    throw Error(ErrorKind::ValidationError, "violated invariant: shape (need one filtration per embedding)");
  for (const auto& steps : fil) {
    if (!steps.is_array()) bad("filtration must be a list of steps");
    Filtration f;
    for (const auto& s : steps) f.push_back({int_field(s, "jump"), Subspace::span(d.n, rows_from_json(field(s, "basis"), d.n))});
    d.filtration.push_back(std::move(f));
  }
  if (j.contains("refinements") && !j.at("refinements").empty()) {
    require_valid(d);
    for (const auto& r : array_field(j, "refinements")) {
      std::vector<Submodule> steps;
      for (const auto& step : array_field(r, "flag")) {
        if (!step.is_array()) bad("refinement step must be a list of per-component bases");
        Submodule s;
        for (const auto& comp : step) s.push_back(Subspace::span(d.n, rows_from_json(comp, d.n)));
        steps.push_back(std::move(s));
      }
      out.refinements.push_back(validate_refinement(d, steps));
    }
  }
  return out;
}

namespace {

Json character_to_json(const InfinitesimalCharacter& c) {
  return Json{{"base_at_pi", to_json(c.base_at_pi)}, {"base_at_p", to_json(c.base_at_p)},
              {"base_weights", to_json(c.base_weights)}, {"eps_at_pi", to_json(c.eps_at_pi)},
              {"eps_at_p", to_json(c.eps_at_p)}, {"eps_weights", to_json(c.eps_weights)},
              {"smooth_tag", c.smooth_tag}};
}

InfinitesimalCharacter character_from_json(const Json& j) {
  InfinitesimalCharacter c;
  c.base_at_pi = scalar_from_json(field(j, "base_at_pi"));
  c.base_at_p = scalar_from_json(field(j, "base_at_p"));
  c.base_weights = scalars_from_json(field(j, "base_weights"));
  c.eps_at_pi = scalar_from_json(field(j, "eps_at_pi"));
  c.eps_at_p = scalar_from_json(field(j, "eps_at_p"));
  c.eps_weights = scalars_from_json(field(j, "eps_weights"));
  if (j.contains("smooth_tag")) {
    if (!j.at("smooth_tag").is_string()) bad("smooth_tag must be a string");
    c.smooth_tag = j.at("smooth_tag").get<std::string>();
  }
  return c;
}

}  // namespace

Json family_to_json(const FamilyFile& fam) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "family";
  j["ctx"] = to_json(fam.ctx);
  j["characters"] = Json::array();
  for (const auto& c : fam.characters) j["characters"].push_back(character_to_json(c));
  if (fam.L) j["L"] = to_json(*fam.L);
  if (fam.s) j["s"] = *fam.s;
  if (fam.t) j["t"] = *fam.t;
  return j;
}

FamilyFile family_from_json(const Json& j) {
  if (!j.is_object()) bad("family description must be a JSON object");
  expect_kind(j, "family");
  FamilyFile fam;
  fam.ctx = context_from_json(j);
  for (const auto& c : array_field(j, "characters")) fam.characters.push_back(character_from_json(c));
  if (j.contains("L")) fam.L = scalars_from_json(j.at("L"));
  if (j.contains("s")) fam.s = int_field(j, "s");
  if (j.contains("t")) fam.t = int_field(j, "t");
  return fam;
}

Json class_to_json(const UnramifiedClass& x) {
  return Json{{"schema", kSchema}, {"kind", "unramified_class"}, {"a0", to_json(x.a0)}, {"a", to_json(x.a)}};
}

Json class_to_json(const KummerClass& y) {
  return Json{{"schema", kSchema}, {"kind", "kummer_class"}, {"b0", to_json(y.b0)}, {"b", to_json(y.b)}};
}

UnramifiedClass unramified_from_json(const Json& j) {
  expect_kind(j, "unramified_class");
  return {scalar_from_json(field(j, "a0")), scalars_from_json(field(j, "a"))};
}

KummerClass kummer_from_json(const Json& j) {
  expect_kind(j, "kummer_class");
  return {scalar_from_json(field(j, "b0")), scalars_from_json(field(j, "b"))};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace phinlab
