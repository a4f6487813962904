#include "phinlab/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "phinlab/family.hpp"
#include "phinlab/fixtures.hpp"
#include "phinlab/linvariant.hpp"
#include "phinlab/pairing.hpp"
#include "phinlab/random_modules.hpp"
#include "phinlab/trials.hpp"

namespace phinlab {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
      return kExitParse;
    case ErrorKind::EigenvalueDegeneracy:
    case ErrorKind::EigenvaluesNotRational:
    case ErrorKind::NotMarked:
    case ErrorKind::NotStronglyMarked:
    case ErrorKind::NoPerfectDecomposition:
    case ErrorKind::SingularConstantTerm:
      return kExitPrecondition;
    default:
      return kExitValidation;
  }
}

Json convention_banner() {
  return Json{
      {"t_N", "v_p(det phi^f) on the component of the identity embedding"},
      {"t_H", "(1/ef) sum over embeddings of sum_i i dim gr^i"},
      {"weights", "Hodge-Tate weights are the filtration jumps; the cyclotomic character has weight -1"},
      {"frobenius", "phi(v)_c = Phi_c v_{c+1}; sigma(x)_j = x_{j+1 mod f}; phi^f on component 0 is Phi_0 Phi_1 ... Phi_{f-1}"},
      {"characters", "value_at_pi records alpha_i; the algebraic part and the smooth twist stay symbolic"},
      {"pairing", "values in units of psi_0 cup [(p)]; psi_tau normalized by log(p) = 0"},
      {"scalars", "exact rationals written num/den"},
  };
}

namespace {

Json submodule_json(const Submodule& w) {
  Json a = Json::array();
  for (const auto& s : w) {
    Json rows = Json::array();
    for (const auto& v : s.basis()) rows.push_back(to_json(v));
    a.push_back(rows);
  }
  return a;
}

Json ints(const std::vector<int>& v) { return Json(v); }

Json gamma_json(const GammaCoefficients& g) { return Json{{"gamma0", to_json(g.gamma0)}, {"gamma_tau", to_json(g.gamma_tau)}}; }

void apply_overrides(Json& j, const AnalysisRequest& req) {
  if (!j.is_object() || !j.contains("ctx") || !j.at("ctx").is_object()) return;
  if (req.prime) j["ctx"]["p"] = *req.prime;
  if (req.ext) {
    j["ctx"]["e"] = req.ext->first;
    j["ctx"]["f"] = req.ext->second;
  }
}

ModuleFile load_module(const std::string& path, const AnalysisRequest& req) {
  Json j = read_json_file(path);
  apply_overrides(j, req);
  return module_from_json(j);
}

std::vector<Refinement> refinements_of(const ModuleFile& mf) {
  if (!mf.refinements.empty()) return mf.refinements;
  return enumerate_refinements(mf.module, Execution::Parallel);
}

Json source_of(const ModuleFile& mf) { return mf.refinements.empty() ? "enumerated" : "file"; }

int cmd_validate(const AnalysisRequest& req, Json& results) {
  std::optional<Error> first;
  for (const auto& path : req.inputs) {
    const FilteredPhiNModule d = load_module(path, req).module;
    const ValidationReport rep = validate(d);
    Json r{{"input", path}, {"n", d.n}, {"valid", rep.ok()}, {"violations", rep.violations}};
    if (rep.ok()) {
      r["t_N"] = to_json(newton_number(d));
      r["t_H"] = to_json(hodge_number(d));
      Json hts = Json::array();
      for (const auto& w : hodge_tate_weights(d)) hts.push_back(ints(w));
      r["hodge_tate_weights"] = hts;
    } else if (!first) {
      first = Error(ErrorKind::ValidationError, "violated invariant: " + rep.violations.front() + " (" + path + ")");
    }
    results.push_back(r);
  }
  if (first) throw *first;
  return kExitOk;
}

int cmd_admissible(const AnalysisRequest& req, Json& results) {
  for (const auto& path : req.inputs) {
    const FilteredPhiNModule d = load_module(path, req).module;
    require_valid(d);
    const AdmissibilityResult a = is_weakly_admissible(d);
    results.push_back(Json{{"input", path},
                           {"admissible", a.admissible},
                           {"t_H", to_json(a.t_H)},
                           {"t_N", to_json(a.t_N)},
                           {"stable_submodules", a.stable_submodules},
                           {"witness", a.witness ? submodule_json(*a.witness) : Json(nullptr)}});
  }
  return kExitOk;
}

int cmd_refinements(const AnalysisRequest& req, Json& results) {
  for (const auto& path : req.inputs) {
    const ModuleFile mf = load_module(path, req);
    require_valid(mf.module);
    const auto refs = refinements_of(mf);
    Json list = Json::array();
    for (size_t k = 0; k < refs.size(); ++k) {
      const Refinement& r = refs[k];
      const GradedData g = graded_data(mf.module, r);
      Json flag = Json::array();
      for (int i = 1; i <= r.n(); ++i) flag.push_back(submodule_json(r.flag[i]));
      Json weights = Json::array();
      for (const auto& w : g.weights) weights.push_back(ints(w));
      Json params = Json::array();
      for (const auto& c : refinement_to_parameters(mf.module, r))
        params.push_back(Json{{"alpha", to_json(c.alpha)}, {"weights", ints(c.weights)},
                              {"value_at_pi", to_json(c.value_at_pi)}, {"smooth_tag", c.smooth_tag}});
      list.push_back(Json{{"index", k + 1},
                          {"flag", flag},
                          {"alphas", to_json(g.alphas)},
                          {"weights", weights},
                          {"marked", marked_indices(mf.module, r).marked()},
                          {"parameters", params}});
    }
    results.push_back(Json{{"input", path}, {"source", source_of(mf)}, {"count", refs.size()}, {"refinements", list}});
  }
  return kExitOk;
}

Json index_map(const std::map<int, int>& m) {
  Json o = Json::object();
  for (const auto& [k, v] : m) o[std::to_string(k)] = v;
  return o;
}

int cmd_nf(const AnalysisRequest& req, Json& results) {
  int code = kExitOk;
  for (const auto& path : req.inputs) {
    const ModuleFile mf = load_module(path, req);
    require_valid(mf.module);
    const FilteredPhiNModule& d = mf.module;
    const auto refs = refinements_of(mf);
    Json list = Json::array();
    for (size_t k = 0; k < refs.size(); ++k) {
      const Refinement& r = refs[k];
      const NFOperator nf = compute_NF(d, r);
      const MarkedIndexMap marks = marked_indices(nf);
      Json entries = Json::array();
      for (size_t i = 0; i < nf.entries.size(); ++i)
        entries.push_back(Json{{"i", i + 1}, {"target", nf.entries[i].target}, {"lambda", to_json(nf.entries[i].lambda)}});
      bool agrees = true;
      for (int s = 1; s <= r.n(); ++s)
        for (int t = s + 1; t <= r.n(); ++t) {
          const bool via_nf = marks.t_of.count(s) && marks.t_of.at(s) == t;
          if (via_nf != check_marked_criterion(d, r, s, t)) agrees = false;
        }
      const bool well_formed = nf_well_formed(nf);
      const bool commutes = nf_commutes_with_phi(d, r, nf);
      const bool duality = check_nf_duality(d, r);
      if (!(agrees && well_formed && commutes && duality)) code = kExitProperty;
      list.push_back(Json{{"index", k + 1},
                          {"N_F", entries},
                          {"marked", marks.marked()},
                          {"t_F", index_map(marks.t_of)},
                          {"s_F", index_map(marks.s_of)},
                          {"well_formed", well_formed},
                          {"commutes_with_phi", commutes},
                          {"criterion_agrees", agrees},
                          {"dual_pairing_holds", duality}});
    }
    results.push_back(Json{{"input", path}, {"source", source_of(mf)}, {"refinements", list}});
  }
  return code;
}

int cmd_linvariant(const AnalysisRequest& req, Json& results) {
  int code = kExitOk;
  for (const auto& path : req.inputs) {
    const ModuleFile mf = load_module(path, req);
    require_valid(mf.module);
    const FilteredPhiNModule& d = mf.module;
    const auto refs = refinements_of(mf);
    Json list = Json::array();
    for (size_t k = 0; k < refs.size(); ++k) {
      const Refinement& r = refs[k];
      const MarkedIndexMap marks = marked_indices(d, r);
      Json pairs = Json::array();
      for (const auto& [s, t] : marks.t_of) {
        Json e{{"s", s}, {"t", t}};
        const bool strongly = is_strongly_marked(d, r, s);
        e["strongly_marked"] = strongly;
        if (strongly) {
          const WellDefinedReport w = check_well_defined(d, r, s, t);
          e["L"] = to_json(w.value);
          e["decompositions"] = w.decompositions;
          e["perfect"] = w.perfect;
          e["consistent"] = w.consistent;
          if (!w.consistent) code = kExitProperty;
        }
        const DualityReport dr = duality_transport(d, r, s);
        e["dual"] = Json{{"s", dr.dual_s}, {"t", dr.dual_t}, {"marked", dr.dual_marked},
                         {"strongly_marked", dr.dual_strongly}, {"holds", dr.holds()}};
        if (!dr.holds()) code = kExitProperty;
        pairs.push_back(e);
      }
      list.push_back(Json{{"index", k + 1}, {"marked", marks.marked()}, {"pairs", pairs}});
    }
    results.push_back(Json{{"input", path}, {"source", source_of(mf)}, {"refinements", list}});
  }
  return code;
}

int cmd_cgs(const AnalysisRequest& req, Json& results) {
  int code = kExitOk;
  for (const auto& path : req.inputs) {
    Json j = read_json_file(path);
    apply_overrides(j, req);
    const FamilyFile fam = family_from_json(j);
    if (!fam.L || !fam.s || !fam.t) throw Error(ErrorKind::ValidationError, "violated invariant: family file needs L, s and t");
    for (const auto& c : fam.characters) validate_character(c, fam.ctx, req.consistency);
    const int s = *fam.s, t = *fam.t;
    const Scalar residual = cgs_residual(fam.characters, s, t, *fam.L, fam.ctx);
    const InfinitesimalCharacter& ds = fam.characters.at(s - 1);
    const InfinitesimalCharacter& dt = fam.characters.at(t - 1);
    const GammaCoefficients gs = gamma_from_epsilon(ds, fam.ctx);
    const GammaCoefficients gt = gamma_from_epsilon(dt, fam.ctx);
    const bool aux = aux_relation_check(gt, gs, *fam.L);
    const DerivationReport dr = derive_theorem_from_aux(ds, dt, *fam.L, fam.ctx);
    const bool pass = residual == 0 && aux && dr.equivalent();
    if (!pass) code = kExitProperty;
    results.push_back(Json{{"input", path},
                           {"s", s},
                           {"t", t},
                           {"residual", to_json(residual)},
                           {"gamma_s", gamma_json(gs)},
                           {"gamma_t", gamma_json(gt)},
                           {"aux_relation", aux},
                           {"derivation", Json{{"residual", to_json(dr.residual)}, {"residual_zero", dr.residual_zero},
                                               {"aux_holds", dr.aux_holds}, {"equivalent", dr.equivalent()}}},
                           {"pass", pass}});
  }
  return code;
}

int cmd_pairing(const AnalysisRequest& req, Json& results) {
  if (req.inputs.empty()) return kExitOk;
  if (req.inputs.size() != 2) throw Error(ErrorKind::ParseError, "pairing takes an unramified class file and a Kummer class file");
  std::optional<UnramifiedClass> x;
  std::optional<KummerClass> y;
  for (const auto& path : req.inputs) {
    const Json j = read_json_file(path);
    const std::string kind = j.is_object() && j.contains("kind") && j.at("kind").is_string() ? j.at("kind").get<std::string>() : "";
    if (kind == "unramified_class" && !x) x = unramified_from_json(j);
    else if (kind == "kummer_class" && !y) y = kummer_from_json(j);
    else throw Error(ErrorKind::ParseError, "'" + path + "' is not the expected class file");
  }
  const int degree = static_cast<int>(x->a.size());
  if (static_cast<int>(y->b.size()) != degree) throw Error(ErrorKind::ValidationError, "violated invariant: class degrees differ");
  Json kernel = Json::array();
  for (const auto& v : pairing_kernel(degree)) kernel.push_back(to_json(v));
  results.push_back(Json{{"inputs", req.inputs},
                         {"value", to_json(cup_product(*x, *y))},
                         {"de_rham", is_de_rham_cocycle(*x)},
                         {"degree", degree},
                         {"gram", to_json(pairing_matrix(degree))},
                         {"kernel", kernel}});
  return kExitOk;
}

FieldContext fixture_context(const AnalysisRequest& req) {
  const auto [e, f] = req.ext.value_or(std::pair<int, int>{1, 1});
  return FieldContext::make(req.prime.value_or(3), e, f);
}

std::vector<Scalar> fixture_L(const AnalysisRequest& req, const FieldContext& ctx, Rng& rng) {
  const int deg = ctx.degree();
  std::vector<Scalar> L;
  for (const auto& s : req.L) L.push_back(parse_scalar(s));
  if (L.empty())
    for (int k = 0; k < deg; ++k) L.push_back(rng.small_rational());
  if (L.size() == 1) L.assign(deg, L.front());
  if (static_cast<int>(L.size()) != deg) throw Error(ErrorKind::ValidationError, "violated invariant: need one L value per embedding");
  return L;
}

std::vector<int> broadcast(const std::vector<int>& v, int fallback, int deg) {
  if (v.empty()) return std::vector<int>(deg, fallback);
  if (v.size() == 1) return std::vector<int>(deg, v.front());
  if (static_cast<int>(v.size()) != deg) throw Error(ErrorKind::ValidationError, "violated invariant: need one weight per embedding");
  return v;
}

Refinement basis_refinement(const FilteredPhiNModule& d, const std::vector<int>& order) {
  std::vector<Vec> basis;
  for (int i : order) basis.push_back(unit_vector(d.n, i));
  return refinement_from_basis(d, basis);
}

Json family_fixture(const FieldContext& ctx, Rng& rng, const std::vector<Scalar>& L) {
  const int deg = ctx.degree();
  auto character = [&]() {
    InfinitesimalCharacter d;
    d.base_at_pi = rng.nonzero_rational();
    d.base_at_p = d.base_at_pi;
    for (int k = 1; k < ctx.e(); ++k) d.base_at_p *= d.base_at_pi;
    d.eps_at_pi = rng.small_rational();
    d.eps_at_p = ctx.e() * d.eps_at_pi;
    for (int k = 0; k < deg; ++k) {
      d.base_weights.push_back(Scalar(rng.uniform(-3, 3)));
      d.eps_weights.push_back(rng.small_rational());
    }
    return d;
  };
  FamilyFile fam;
  fam.ctx = ctx;
  fam.characters = {character(), character()};
  InfinitesimalCharacter& ds = fam.characters[0];
  InfinitesimalCharacter& dt = fam.characters[1];
  // Put the pair on the zero-residual locus, keeping eps(p) = e eps(pi_K).
  Scalar acc = 0;
  for (int k = 0; k < deg; ++k) acc += L[k] * (dt.eps_weights[k] - ds.eps_weights[k]);
  dt.eps_at_p = ds.eps_at_p - deg * acc;
  dt.eps_at_pi = dt.eps_at_p / ctx.e();
  fam.L = L;
  fam.s = 1;
  fam.t = 2;
  return family_to_json(fam);
}

int cmd_fixtures(const AnalysisRequest& req, Json& results) {
  const FieldContext ctx = fixture_context(req);
  Rng rng(req.seed);
  const int deg = ctx.degree();
  Json doc;
  if (req.kind == "aux") {
    const FilteredPhiNModule d = auxiliary_module(fixture_L(req, ctx, rng), ctx, req.lowest);
    doc = module_to_json(d, {auxiliary_refinement(d, {1, 2, 3}), auxiliary_refinement(d, {1, 3, 2})});
  } else if (req.kind == "tensor-source" || req.kind == "tensor-big" || req.kind == "tensor-block") {
    const std::vector<Scalar> L = fixture_L(req, ctx, rng);
    const std::vector<int> a = broadcast(req.low, 0, deg), b = broadcast(req.high, 1, deg);
    if (req.kind == "tensor-source") {
      const FilteredPhiNModule d = tensor_source_module(req.rank, L, a, b, ctx);
      std::vector<int> order;
      for (int i = 0; i < req.rank; ++i) order.push_back(i);
      doc = module_to_json(d, {basis_refinement(d, order)});
    } else {
      const TensorFixtures tf = tensor_fixtures(req.rank, L, a, b, ctx);
      if (req.kind == "tensor-big") doc = module_to_json(tf.big);
      else doc = module_to_json(tf.block, {basis_refinement(tf.block, {1, 0, 2}), basis_refinement(tf.block, {1, 2, 0})});
    }
  } else if (req.kind == "family") {
    doc = family_fixture(ctx, rng, fixture_L(req, ctx, rng));
  } else if (req.kind == "unramified-class") {
    UnramifiedClass x{rng.small_rational(), {}};
    for (int k = 0; k < deg; ++k) x.a.push_back(rng.small_rational());
    doc = class_to_json(x);
  } else if (req.kind == "kummer-class") {
    KummerClass y{rng.small_rational(), {}};
    for (int k = 0; k < deg; ++k) y.b.push_back(rng.small_rational());
    doc = class_to_json(y);
  } else {
    throw Error(ErrorKind::ParseError, "unknown fixture kind '" + req.kind + "'");
  }
  if (req.out) {
    std::ofstream out(*req.out);
    if (!out || !(out << dump_canonical(doc))) throw Error(ErrorKind::ParseError, "cannot write '" + *req.out + "'");
  }
  results.push_back(Json{{"kind", req.kind}, {"out", req.out ? Json(*req.out) : Json(nullptr)}, {"fixture", doc}});
  return kExitOk;
}

Json request_echo(const AnalysisRequest& req) {
  Json j{{"command", req.command},
         {"inputs", req.inputs},
         {"seed", req.seed},
         {"trials", req.trials},
         {"consistency", req.consistency},
         {"format", req.format == Format::Json ? "json" : "text"}};
  if (req.prime) j["prime"] = *req.prime;
  if (req.ext) j["ext"] = Json::array({req.ext->first, req.ext->second});
  if (req.command == "fixtures") {
    j["kind"] = req.kind;
    j["L"] = req.L;
    j["n"] = req.rank;
    j["low"] = req.low;
    j["high"] = req.high;
    j["lowest"] = req.lowest;
    j["out"] = req.out ? Json(*req.out) : Json(nullptr);
  }
  return j;
}

int run_suites(const AnalysisRequest& req, Json& suites) {
  const auto named = suites_for(req.command);
  if (named.empty()) throw Error(ErrorKind::ParseError, "no randomized suite for '" + req.command + "'");
  int code = kExitOk;
  for (const auto& suite : named) {
    const SuiteSummary s = summarize(run_trials(req.trials, req.seed, suite.fn, Execution::Parallel));
    if (!s.ok()) code = kExitProperty;
    suites.push_back(Json{{"name", suite.name},
                          {"trials", s.trials},
                          {"failures", s.failures},
                          {"checks", s.checks},
                          {"interesting", s.interesting},
                          {"first_failure", s.first_failure}});
  }
  return code;
}

void flatten(const Json& j, const std::string& prefix, std::ostringstream& out) {
  auto scalar_text = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    if (j.empty()) out << prefix << " = {}\n";
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    bool flat = true;
    for (const auto& v : j) flat = flat && v.is_primitive();
    if (flat) {
      out << prefix << " = [";
      for (size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << scalar_text(j[i]);
      out << "]\n";
    } else {
      for (size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << prefix << " = " << scalar_text(j) << "\n";
  }
}

}  // namespace

Report run(const AnalysisRequest& req) {
  Report rep;
  Json& body = rep.body;
  body["schema"] = kSchema;
  body["conventions"] = convention_banner();
  body["request"] = request_echo(req);
  body["results"] = Json::array();
  try {
    if (req.command != "fixtures" && req.inputs.empty() && req.trials <= 0)
      throw Error(ErrorKind::ParseError, "no input files and no --trials");
    Json& results = body["results"];
    int code = kExitOk;
    if (req.command == "validate") code = cmd_validate(req, results);
    else if (req.command == "admissible") code = cmd_admissible(req, results);
    else if (req.command == "refinements") code = cmd_refinements(req, results);
    else if (req.command == "nf") code = cmd_nf(req, results);
    else if (req.command == "linvariant") code = cmd_linvariant(req, results);
    else if (req.command == "cgs-check") code = cmd_cgs(req, results);
    else if (req.command == "pairing") code = cmd_pairing(req, results);
    else if (req.command == "fixtures") code = cmd_fixtures(req, results);
    else throw Error(ErrorKind::ParseError, "unknown command '" + req.command + "'");
    if (req.trials > 0) {
      body["suites"] = Json::array();
      code = std::max(code, run_suites(req, body["suites"]));
    }
    rep.exit_code = code;
    body["status"] = code == kExitOk ? "ok" : "property-failure";
  } catch (const Error& e) {
    rep.exit_code = exit_code_for(e.kind());
    body["status"] = "error";
    body["error"] = Json{{"kind", to_string(e.kind())}, {"message", e.what()}};
  }
  body["exit_code"] = rep.exit_code;
  return rep;
}

std::string emit(const Report& report, Format format) {
  if (format == Format::Json) return dump_canonical(report.body);
  std::ostringstream out;
  flatten(report.body, "", out);
  return out.str();
}

CliOutcome run_cli(const std::vector<std::string>& args) {
  AnalysisRequest req;
  CLI::App app{"Exact analysis of filtered (phi, N)-modules"};
  std::optional<long> prime;
  std::vector<int> ext;
  std::string format = "json";
  std::optional<std::string> out;
  app.add_option("command", req.command, "validate | admissible | refinements | nf | linvariant | cgs-check | pairing | fixtures")
      ->required();
  app.add_option("files", req.inputs, "input description files");
  app.add_option("--prime", prime, "override the residue characteristic p");
  app.add_option("--ext", ext, "override (e, f)")->expected(2);
  app.add_option("--seed", req.seed, "seed for randomized suites and fixtures");
  app.add_option("--trials", req.trials, "run the randomized suites for the command");
  app.add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--consistency", req.consistency, "enforce eps(p) = e eps(pi_K) on family files");
  app.add_option("--kind", req.kind, "fixture kind: aux, tensor-source, tensor-big, tensor-block, family, unramified-class, kummer-class");
  app.add_option("--L", req.L, "L values (one per embedding, or one to broadcast)")->delimiter(',');
  app.add_option("--n", req.rank, "rank of the tensor source fixture");
  app.add_option("--low", req.low, "lower filtration jump(s) of the tensor source")->delimiter(',');
  app.add_option("--high", req.high, "upper filtration jump(s) of the tensor source")->delimiter(',');
  app.add_option("--lowest", req.lowest, "lowest jump of the auxiliary fixture");
  app.add_option("--out", out, "write the fixture document here");
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    return {kExitOk, app.help(), ""};
  } catch (const CLI::ParseError& e) {
    Report rep;
    rep.exit_code = kExitParse;
    rep.body = Json{{"schema", kSchema},
                    {"conventions", convention_banner()},
                    {"status", "error"},
                    {"exit_code", kExitParse},
                    {"error", Json{{"kind", to_string(ErrorKind::ParseError)}, {"message", e.what()}}}};
    return {kExitParse, emit(rep, Format::Json), std::string("phinlab: ") + e.what() + "\n"};
  }
  req.prime = prime;
  if (ext.size() == 2) req.ext = std::pair<int, int>{ext[0], ext[1]};
  req.format = format == "text" ? Format::Text : Format::Json;
  req.out = out;
  const Report rep = run(req);
  std::string err;
  if (rep.body.contains("error")) err = "phinlab: " + rep.body["error"]["message"].get<std::string>() + "\n";
  return {rep.exit_code, emit(rep, req.format), err};
}

}  // namespace phinlab
