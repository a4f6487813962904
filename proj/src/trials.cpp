#include "phinlab/trials.hpp"

#include <cstdlib>
#include <exception>

#include "phinlab/error.hpp"
#include "phinlab/family.hpp"
#include "phinlab/linvariant.hpp"
#include "phinlab/pairing.hpp"
#include "phinlab/random_modules.hpp"

namespace phinlab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(splitmix64(seed) ^ index); }

namespace {

TrialResult guarded(const TrialFn& fn, std::uint64_t seed) {
  try {
    return fn(seed);
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what(), 0, 0};
  }
}

}  // namespace

std::vector<TrialResult> run_trials(int count, std::uint64_t seed, const TrialFn& fn, Execution exec) {
  std::vector<TrialResult> out(count);
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) out[i] = guarded(fn, trial_seed(seed, static_cast<std::uint64_t>(i)));
  } else {
    for (int i = 0; i < count; ++i) out[i] = guarded(fn, trial_seed(seed, static_cast<std::uint64_t>(i)));
  }
  return out;
}

SuiteSummary summarize(const std::vector<TrialResult>& results) {
  SuiteSummary s;
  for (size_t i = 0; i < results.size(); ++i) {
    ++s.trials;
    s.checks += results[i].checks;
    s.interesting += results[i].interesting;
    if (!results[i].pass) {
      if (s.failures == 0) s.first_failure = "trial " + std::to_string(i) + ": " + results[i].detail;
      ++s.failures;
    }
  }
  return s;
}

namespace {

TrialResult fail(std::string why) { return {false, std::move(why), 0, 0}; }

RandomInstance draw(Rng& rng, bool allow_decomposable) {
  const FieldContext ctx = random_context(rng, 4);
  if (allow_decomposable && rng.chance(35)) return random_decomposable_instance(rng, ctx);
  return random_instance(rng, ctx);
}

}  // namespace

TrialResult marked_criterion_trial(std::uint64_t seed) {
  Rng rng(seed);
  const RandomInstance inst = draw(rng, true);
  const auto marks = marked_indices(inst.d, inst.r);
  TrialResult res;
  const int n = inst.r.n();
  for (int s = 1; s <= n; ++s)
    for (int t = s + 1; t <= n; ++t) {
      const bool via_nf = marks.t_of.count(s) && marks.t_of.at(s) == t;
      const bool direct = check_marked_criterion(inst.d, inst.r, s, t);
      ++res.checks;
      if (via_nf) ++res.interesting;
      if (via_nf != direct)
        return fail("(s,t)=(" + std::to_string(s) + "," + std::to_string(t) + ") N_F says " + std::to_string(via_nf) +
                    ", criterion says " + std::to_string(direct));
    }
  return res;
}

TrialResult nf_duality_trial(std::uint64_t seed) {
  Rng rng(seed);
  const RandomInstance inst = draw(rng, true);
  TrialResult res;
  const NFOperator nf = compute_NF(inst.d, inst.r);
  if (!nf_well_formed(nf)) return fail("N_F has a proper nonzero image");
  if (!nf_commutes_with_phi(inst.d, inst.r, nf)) return fail("N_F phi_F != p phi_F N_F");
  if (!check_nf_duality(inst.d, inst.r)) return fail("<N_dual x, y> + <x, N_F y> != 0");
  res.checks += 3;
  const auto marks = marked_indices(nf);
  for (const auto& [s, t] : marks.t_of) {
    const DualityReport rep = duality_transport(inst.d, inst.r, s);
    ++res.checks;
    ++res.interesting;
    if (!rep.dual_marked) return fail("marked index " + std::to_string(s) + " does not transport to the dual");
    if (rep.strongly != rep.dual_strongly) return fail("strong markedness of " + std::to_string(s) + " does not transport");
  }
  // Marked sets correspond one to one.
  const auto dual_marks = marked_indices(dual(inst.d), dual_refinement(inst.d, inst.r));
  if (dual_marks.t_of.size() != marks.t_of.size()) return fail("dual has a different number of marked indices");
  return res;
}

TrialResult well_defined_trial(std::uint64_t seed) {
  Rng rng(seed);
  const RandomInstance inst = draw(rng, true);
  TrialResult res;
  for (const auto& [s, t] : marked_indices(inst.d, inst.r).t_of) {
    if (!is_strongly_marked(inst.d, inst.r, s)) continue;
    const WellDefinedReport rep = check_well_defined(inst.d, inst.r, s, t);
    ++res.checks;
    if (rep.perfect > 1) ++res.interesting;
    if (!rep.consistent) return fail("perfect decompositions of " + std::to_string(s) + " disagree");
  }
  return res;
}

TrialResult linvariant_shape_trial(std::uint64_t seed) {
  Rng rng(seed);
  const RandomInstance inst = draw(rng, true);
  TrialResult res;
  const GradedData g = graded_data(inst.d, inst.r);
  for (const auto& [s, t] : marked_indices(inst.d, inst.r).t_of) {
    const auto decs = find_s_decompositions(inst.d, inst.r, s);
    if (inst.semisimple && decs.empty()) return fail("semisimple instance without s-decomposition");
    if (t == s + 1) {
      bool weights_ok = true;
      for (size_t tau = 0; tau < g.weights[s - 1].size(); ++tau)
        weights_ok = weights_ok && g.weights[s - 1][tau] < g.weights[t - 1][tau];
      ++res.checks;
      ++res.interesting;
      if (is_strongly_marked(inst.d, inst.r, s) != weights_ok) return fail("adjacent-case weight test disagrees");
    }
    for (const auto& dec : decs) {
      const auto w = is_perfect(dec);
      if (!w) continue;
      const Scalar c = rng.nonzero_rational(4);
      SDecomposition scaled = dec;
      for (auto& v : scaled.e_s) v = vec_scale(c, v);
      for (auto& v : scaled.e_t) v = vec_scale(c, v);
      const auto w2 = is_perfect(scaled);
      ++res.checks;
      if (!w2 || w2->L != w->L) return fail("L-invariant changed under rescaling");
    }
  }
  return res;
}

TrialResult cgs_derivation_trial(std::uint64_t seed) {
  Rng rng(seed);
  const FieldContext ctx = random_context(rng, 6);
  const int deg = ctx.degree();
  auto character = [&]() {
    InfinitesimalCharacter d;
    d.base_at_pi = rng.nonzero_rational();
    d.base_at_p = rng.nonzero_rational();
    d.eps_at_pi = rng.small_rational();
    d.eps_at_p = rng.small_rational();
    for (int k = 0; k < deg; ++k) {
      d.base_weights.push_back(Scalar(rng.uniform(-3, 3)));
      d.eps_weights.push_back(rng.small_rational());
    }
    return d;
  };
  InfinitesimalCharacter ds = character(), dt = character();
  std::vector<Scalar> L;
  for (int k = 0; k < deg; ++k) L.push_back(rng.small_rational());
  // Half the draws are forced onto the zero-residual locus.
  if (rng.chance(50)) {
    Scalar acc = 0;
    for (int k = 0; k < deg; ++k) acc += L[k] * (dt.eps_weights[k] - ds.eps_weights[k]);
    dt.eps_at_p = ds.eps_at_p - deg * acc;
  }
  const DerivationReport rep = derive_theorem_from_aux(ds, dt, L, ctx);
  TrialResult res;
  res.checks = 1;
  res.interesting = rep.residual_zero ? 1 : 0;
  if (!rep.equivalent()) return fail("residual " + rep.residual.get_str() + " but auxiliary relation " + (rep.aux_holds ? "holds" : "fails"));
  return res;
}

TrialResult module_ops_trial(std::uint64_t seed) {
  Rng rng(seed);
  const FieldContext ctx = random_context(rng, 2);
  InstanceOptions opt;
  opt.max_rank = 3;
  const RandomInstance inst = random_instance(rng, ctx, opt);
  const FilteredPhiNModule& d = inst.d;
  TrialResult res;
  if (!validate(d).ok()) return fail("random module invalid: " + validate(d).violations.front());
  const FilteredPhiNModule dd = dual(d);
  if (!validate(tensor(d, dd)).ok()) return fail("D (x) D* invalid");
  if (newton_number(dd) != -newton_number(d) || hodge_number(dd) != -hodge_number(d)) return fail("dual does not negate t_N, t_H");
  if (!(dual(dd) == d)) return fail("double dual differs");
  res.checks += 4;
  for (int i = 1; i < inst.r.n(); ++i) {
    const FilteredPhiNModule s = sub(d, inst.r.flag[i]);
    const FilteredPhiNModule q = quotient(d, inst.r.flag[i]);
    if (!validate(s).ok() || !validate(q).ok()) return fail("sub or quotient invalid");
    if (newton_number(s) + newton_number(q) != newton_number(d)) return fail("t_N not additive");
    if (hodge_number(s) + hodge_number(q) != hodge_number(d)) return fail("t_H not additive");
    res.checks += 3;
    ++res.interesting;
  }
  return res;
}

TrialResult rank1_admissibility_trial(std::uint64_t seed) {
  Rng rng(seed);
  const FieldContext ctx = random_context(rng, 4);
  const int deg = ctx.degree();
  const int h = rng.uniform(-3, 3);
  Scalar a = rng.pick(std::vector<Scalar>{1, -1, Scalar(1, 2), 3, Scalar(-2, 7)});
  if (p_valuation(a, ctx.p()).value_or(0) != 0) a = 1;
  for (int k = 0; k < std::abs(h); ++k) a = h > 0 ? Scalar(a * ctx.p()) : Scalar(a / ctx.p());
  std::vector<int> jumps(deg);
  for (int& j : jumps) j = rng.uniform(-3, 3);
  // Half the draws land on t_H = v_p(a).
  if (rng.chance(50)) {
    int sum = 0;
    for (int k = 1; k < deg; ++k) sum += jumps[k];
    jumps[0] = deg * h - sum;
  }
  const FilteredPhiNModule d = construct_rank1(a, jumps, ctx);
  const bool admissible = is_weakly_admissible(d).admissible;
  TrialResult res;
  res.checks = 1;
  res.interesting = admissible ? 1 : 0;
  if (admissible != (hodge_number(d) == Scalar(h))) return fail("rank-1 admissibility disagrees with t_H = v_p(a)");
  return res;
}

TrialResult tensor_additivity_trial(std::uint64_t seed) {
  Rng rng(seed);
  const FieldContext ctx = random_context(rng, 2);
  InstanceOptions opt;
  opt.max_rank = 3;
  const FilteredPhiNModule d1 = random_instance(rng, ctx, opt).d;
  const FilteredPhiNModule d2 = random_instance(rng, ctx, opt).d;
  const FilteredPhiNModule t = tensor(d1, d2);
  TrialResult res;
  res.checks = 3;
  if (!validate(t).ok()) return fail("tensor product invalid");
  if (newton_number(t) != d2.n * newton_number(d1) + d1.n * newton_number(d2)) return fail("t_N not additive on tensors");
  if (hodge_number(t) != d2.n * hodge_number(d1) + d1.n * hodge_number(d2)) return fail("t_H not additive on tensors");
  res.interesting = newton_number(d1) != 0 && newton_number(d2) != 0 ? 1 : 0;
  return res;
}

TrialResult pairing_bilinearity_trial(std::uint64_t seed) {
  Rng rng(seed);
  const int deg = rng.uniform(1, 6);
  auto unr = [&]() {
    UnramifiedClass x{rng.small_rational(), {}};
    for (int k = 0; k < deg; ++k) x.a.push_back(rng.small_rational());
    return x;
  };
  auto kum = [&]() {
    KummerClass y{rng.small_rational(), {}};
    for (int k = 0; k < deg; ++k) y.b.push_back(rng.small_rational());
    return y;
  };
  const UnramifiedClass x1 = unr(), x2 = unr();
  const KummerClass y1 = kum(), y2 = kum();
  const Scalar c1 = rng.small_rational(), c2 = rng.small_rational();
  UnramifiedClass xs{c1 * x1.a0 + c2 * x2.a0, {}};
  KummerClass ys{c1 * y1.b0 + c2 * y2.b0, {}};
  for (int k = 0; k < deg; ++k) {
    xs.a.push_back(c1 * x1.a[k] + c2 * x2.a[k]);
    ys.b.push_back(c1 * y1.b[k] + c2 * y2.b[k]);
  }
  TrialResult res;
  res.checks = 2;
  if (cup_product(xs, y1) != c1 * cup_product(x1, y1) + c2 * cup_product(x2, y1)) return fail("not linear in the first slot");
  if (cup_product(x1, ys) != c1 * cup_product(x1, y1) + c2 * cup_product(x1, y2)) return fail("not linear in the second slot");
  res.interesting = cup_product(x1, y1) != 0 ? 1 : 0;
  return res;
}

std::vector<NamedSuite> suites_for(const std::string& command) {
  if (command == "nf") return {{"marked-criterion", marked_criterion_trial}, {"nf-duality", nf_duality_trial}};
  if (command == "linvariant") return {{"well-defined", well_defined_trial}, {"linvariant-shape", linvariant_shape_trial}};
  if (command == "cgs-check") return {{"cgs-derivation", cgs_derivation_trial}};
  if (command == "validate") return {{"module-ops", module_ops_trial}};
  if (command == "admissible") return {{"rank1-admissibility", rank1_admissibility_trial}, {"tensor-additivity", tensor_additivity_trial}};
  if (command == "pairing") return {{"pairing-bilinearity", pairing_bilinearity_trial}};
  return {};
}

}  // namespace phinlab
