// Acceptance runner: one PASS/FAIL line per criterion. `--criterion k` runs a
// single criterion; the exit status is nonzero when any selected one fails.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>

#include "phinlab/cli.hpp"
#include "phinlab/fixtures.hpp"
#include "phinlab/linvariant.hpp"
#include "phinlab/pairing.hpp"
#include "phinlab/random_modules.hpp"
#include "phinlab/trials.hpp"

using namespace phinlab;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;
};

FieldContext context_up_to(Rng& rng, int max_degree) {
  while (true) {
    const FieldContext ctx = random_context(rng, max_degree);
    if (ctx.degree() <= max_degree) return ctx;
  }
}

std::vector<Scalar> random_L(Rng& rng, const FieldContext& ctx) {
  std::vector<Scalar> L;
  for (int k = 0; k < ctx.degree(); ++k) L.push_back(rng.small_rational(9));
  return L;
}

std::vector<Scalar> negated(std::vector<Scalar> v) {
  for (auto& x : v) x = -x;
  return v;
}

Outcome suite(const TrialFn& fn, int trials, const char* what) {
  const SuiteSummary s = summarize(run_trials(trials, kSeed, fn, Execution::Parallel));
  std::ostringstream out;
  out << trials << " " << what << ", " << s.checks << " checks, " << s.interesting << " non-vacuous";
  if (!s.ok()) out << "; " << s.failures << " failures, first: " << s.first_failure;
  return {s.ok(), out.str()};
}

// Auxiliary module pipeline over 100 random L and contexts with ef <= 4.
Outcome criterion1() {
  Rng rng(kSeed);
  int marked_ok = 0, minus_ok = 0, plus_ok = 0, first_flag_plus = 0;
  const int runs = 100;
  for (int k = 0; k < runs; ++k) {
    const FieldContext ctx = context_up_to(rng, 4);
    const std::vector<Scalar> L = random_L(rng, ctx);
    const FilteredPhiNModule d = auxiliary_module(L, ctx);
    const Refinement r123 = auxiliary_refinement(d, {1, 2, 3});
    const Refinement r132 = auxiliary_refinement(d, {1, 3, 2});
    const MarkedIndexMap m = marked_indices(d, r123);
    if (m.marked() == std::vector<int>{1} && m.t_of.at(1) == 2) ++marked_ok;
    const LInvariant a = l_invariant(d, r123, 1, 2);
    if (a == negated(L)) ++minus_ok;
    if (a == L) ++first_flag_plus;
    if (l_invariant(d, r132, 1, 2) == L) ++plus_ok;
  }
  std::ostringstream out;
  out << "marked={1}, t_F(1)=2: " << marked_ok << "/" << runs << "; flag (f1,f2,f3) gives -L: " << minus_ok << "/"
      << runs << " (observed +L in " << first_flag_plus << "/" << runs << ", the value forced by N(e_t) = e_s)"
      << "; flag (f1,f3,f2) gives +L: " << plus_ok << "/" << runs;
  return {marked_ok == runs && minus_ok == runs && plus_ok == runs, out.str()};
}

Outcome criterion2() { return suite(marked_criterion_trial, 500, "modules of rank <= 4"); }
Outcome criterion3() { return suite(nf_duality_trial, 300, "instances"); }
Outcome criterion4() { return suite(well_defined_trial, 300, "instances"); }
Outcome criterion5() { return suite(cgs_derivation_trial, 1000, "draws"); }

Outcome criterion6() {
  bool ok = true;
  std::ostringstream out;
  for (int deg = 1; deg <= 4; ++deg) {
    std::vector<Scalar> zero(deg, 0);
    if (cup_product({1, zero}, {1, zero}) != 1) ok = false;
    for (int t = 0; t < deg; ++t) {
      std::vector<Scalar> et(deg, 0);
      et[t] = 1;
      if (cup_product({0, et}, {0, et}) != -1) ok = false;
      if (cup_product({1, zero}, {0, et}) != 0 || cup_product({0, et}, {1, zero}) != 0) ok = false;
      for (int u = 0; u < deg; ++u) {
        if (u == t) continue;
        std::vector<Scalar> eu(deg, 0);
        eu[u] = 1;
        if (cup_product({0, et}, {0, eu}) != 0) ok = false;
      }
    }
    if (!pairing_kernel(deg).empty()) ok = false;
  }
  out << "basis pairings and zero kernel for degrees 1..4 " << (ok ? "exact" : "WRONG") << "; ";
  const Outcome bil = suite(pairing_bilinearity_trial, 200, "random pairs");
  return {ok && bil.pass, out.str() + bil.detail};
}

Outcome criterion7() {
  Rng rng(kSeed + 7);
  const int runs = 50;
  int equal = 0, display = 0;
  for (int k = 0; k < runs; ++k) {
    const FieldContext ctx = context_up_to(rng, 4);
    const int n = rng.uniform(2, 4);
    const std::vector<Scalar> L = random_L(rng, ctx);
    std::vector<int> a, b;
    for (int t = 0; t < ctx.degree(); ++t) {
      a.push_back(rng.uniform(-2, 1));
      b.push_back(a.back() + rng.uniform(1, 3));
    }
    const TensorFixtures tf = tensor_fixtures(n, L, a, b, ctx);
    if (tf.block == tensor_block_closed_form(ctx, tf.k_s, tf.k_t, tf.witness) && tf.witness.L == L) ++equal;
    bool shown = true;
    for (int t = 0; t < ctx.degree(); ++t) {
      const int level = tf.k_t[t] - tf.witness.k_t_prime[t];
      if (!fil_at(tf.block.filtration[t], level, 3).contains(Vec{0, L[t], 1})) shown = false;
    }
    if (shown) ++display;
  }
  std::ostringstream out;
  out << "pipeline block equals closed form: " << equal << "/" << runs << "; Fil display e_n* (x) (e_n + L e_1): "
      << display << "/" << runs;
  return {equal == runs && display == runs, out.str()};
}

Outcome criterion8() {
  const Outcome a = suite(rank1_admissibility_trial, 100, "rank-1 draws");
  const Outcome b = suite(tensor_additivity_trial, 100, "tensor pairs");
  return {a.pass && b.pass, a.detail + "; " + b.detail};
}

Outcome criterion9() {
  const std::vector<std::vector<std::string>> commands{
      {"fixtures", "--kind", "aux", "--seed", "41"},
      {"fixtures", "--kind", "aux", "--L", "1/2", "--ext", "2", "2", "--prime", "5"},
      {"fixtures", "--kind", "tensor-source", "--seed", "41", "--n", "4"},
      {"fixtures", "--kind", "tensor-big", "--seed", "41", "--ext", "1", "2"},
      {"fixtures", "--kind", "tensor-block", "--seed", "41", "--n", "3"},
      {"fixtures", "--kind", "family", "--seed", "41", "--ext", "2", "1"},
      {"fixtures", "--kind", "unramified-class", "--seed", "41"},
      {"fixtures", "--kind", "kummer-class", "--seed", "41"},
  };
  int same = 0, ok = 0;
  for (const auto& args : commands) {
    const CliOutcome x = run_cli(args), y = run_cli(args);
    if (x.exit_code == 0 && y.exit_code == 0) ++ok;
    if (x.out == y.out && !x.out.empty()) ++same;
  }
  std::ostringstream out;
  out << same << "/" << commands.size() << " fixture commands byte-identical across two runs, " << ok << " exited 0";
  return {same == static_cast<int>(commands.size()) && ok == same, out.str()};
}

struct Criterion {
  const char* title;
  double limit_s;
  std::function<Outcome()> run;
};

const Criterion kCriteria[] = {
    {"auxiliary fixture pipeline", 5, criterion1},
    {"N_F markedness vs intersection criterion", 30, criterion2},
    {"duality suite", 30, criterion3},
    {"L-invariant well-definedness", 30, criterion4},
    {"residual vs auxiliary relation", 5, criterion5},
    {"cup product pairing", 5, criterion6},
    {"tensor fixture integration", 10, criterion7},
    {"admissibility sanity", 10, criterion8},
    {"CLI determinism", 5, criterion9},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--criterion") == 0) only = std::atoi(argv[i + 1]);
  bool all_pass = true;
  for (int k = 1; k <= 9; ++k) {
    if (only && only != k) continue;
    const Criterion& c = kCriteria[k - 1];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = o.pass && in_time;
    all_pass = all_pass && pass;
    std::printf("criterion %d [%s]: %s (%.2fs, limit %.0fs) %s\n", k, c.title, pass ? "PASS" : "FAIL", secs, c.limit_s,
                o.detail.c_str());
  }
  return all_pass ? 0 : 1;
}
