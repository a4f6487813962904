#include "phinlab/refinement.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "phinlab/error.hpp"

namespace phinlab {

namespace {

// lambda with x - lambda * gen in `lower`; x must lie in lower + E gen.
Scalar coefficient_mod(const Subspace& lower, const Vec& gen, const Vec& x) {
  std::vector<Vec> cols = lower.basis();
  cols.push_back(gen);
  const auto y = solve(Matrix::from_columns(cols, static_cast<int>(gen.size())), x);
  if (!y) throw Error(ErrorKind::ValidationError, "vector does not lie in the expected graded step");
  return y->back();
}

bool same_submodule(const Submodule& x, const Submodule& y) { return x == y; }

}  // namespace

Refinement validate_refinement(const FilteredPhiNModule& d, const std::vector<Submodule>& steps) {
  const int n = d.n;
  if (static_cast<int>(steps.size()) != n) throw Error(ErrorKind::NotAFlag, "a refinement has exactly n steps");
  Refinement r;
  r.flag.push_back(d.zero_submodule());
  for (const auto& s : steps) {
    if (static_cast<int>(s.size()) != d.f()) throw Error(ErrorKind::NotAFlag, "step needs one subspace per component");
    for (const auto& c : s)
      if (c.ambient() != n) throw Error(ErrorKind::NotAFlag, "step has the wrong ambient dimension");
    r.flag.push_back(s);
  }
  for (int i = 1; i <= n; ++i)
    if (!contains(r.flag[i], r.flag[i - 1])) throw Error(ErrorKind::NotAFlag, "steps are not nested at " + std::to_string(i));
  if (n > 0 && !same_submodule(r.flag[n], d.full_submodule())) throw Error(ErrorKind::NotAFlag, "last step is not D");
  for (int i = 1; i <= n; ++i)
    for (const auto& c : r.flag[i])
      if (c.dim() != i) throw Error(ErrorKind::WrongGradedRank, "graded piece " + std::to_string(i) + " is not free of rank 1");
  for (int i = 1; i <= n; ++i) {
    if (!contains(r.flag[i], d.apply_phi(r.flag[i]))) throw Error(ErrorKind::NotStable, "step " + std::to_string(i) + " is not phi-stable");
    if (!contains(r.flag[i], d.apply_N(r.flag[i]))) throw Error(ErrorKind::NotStable, "step " + std::to_string(i) + " is not N-stable");
  }
  return r;
}

Refinement refinement_from_basis(const FilteredPhiNModule& d, const std::vector<Vec>& basis) {
  std::vector<Submodule> steps;
  for (int i = 1; i <= static_cast<int>(basis.size()); ++i) {
    const Subspace s = Subspace::span(d.n, std::vector<Vec>(basis.begin(), basis.begin() + i));
    steps.push_back(Submodule(d.f(), s));
  }
  return validate_refinement(d, steps);
}

namespace {

std::optional<Refinement> refinement_for_order(const FilteredPhiNModule& d, const std::vector<Eigenpair>& eig,
                                               const std::vector<int>& order) {
  Refinement r;
  r.flag.push_back(d.zero_submodule());
  std::vector<Vec> vecs;
  for (int idx : order) {
    vecs.push_back(eig[idx].vector);
    const Submodule w = d.propagate(Subspace::span(d.n, vecs));
    if (!contains(w, d.apply_N(w))) return std::nullopt;
    r.flag.push_back(w);
  }
  return r;
}

}  // namespace

std::vector<Refinement> enumerate_refinements(const FilteredPhiNModule& d, Execution exec) {
  const auto eig = distinct_phi_f_eigenpairs(d);
  std::vector<std::vector<int>> orders;
  std::vector<int> order(d.n);
  std::iota(order.begin(), order.end(), 0);
  do orders.push_back(order);
  while (std::next_permutation(order.begin(), order.end()));

  std::vector<std::optional<Refinement>> slots(orders.size());
  const long count = static_cast<long>(orders.size());
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < count; ++k) slots[k] = refinement_for_order(d, eig, orders[k]);
  } else {
    for (long k = 0; k < count; ++k) slots[k] = refinement_for_order(d, eig, orders[k]);
  }
  std::vector<Refinement> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

std::vector<ModuleVector> graded_generators(const Refinement& r) {
  std::vector<ModuleVector> gens;
  for (int i = 1; i <= r.n(); ++i) {
    ModuleVector v;
    for (size_t c = 0; c < r.flag[i].size(); ++c) v.push_back(first_outside(r.flag[i][c], r.flag[i - 1][c]));
    gens.push_back(std::move(v));
  }
  return gens;
}

GradedData graded_data(const FilteredPhiNModule& d, const Refinement& r) {
  GradedData g;
  const auto gens = graded_generators(r);
  const Matrix a = d.phi_f(0);
  for (int i = 1; i <= r.n(); ++i) {
    g.alphas.push_back(coefficient_mod(r.flag[i - 1][0], gens[i - 1][0], a * gens[i - 1][0]));
    std::vector<int> w;
    for (int tau = 0; tau < d.ctx.degree(); ++tau) {
      const int c = d.component_of(tau);
      const Filtration& fil = d.filtration[tau];
      for (auto it = fil.rbegin(); it != fil.rend(); ++it) {
        if (!r.flag[i - 1][c].contains(intersect(it->space, r.flag[i][c]))) {
          w.push_back(it->jump);
          break;
        }
      }
    }
    g.weights.push_back(std::move(w));
  }
  return g;
}

std::vector<SemilinearScalar> graded_phi(const FilteredPhiNModule& d, const Refinement& r) {
  const auto gens = graded_generators(r);
  std::vector<SemilinearScalar> out;
  for (int i = 1; i <= r.n(); ++i) {
    std::vector<Scalar> mu(d.f());
    const ModuleVector img = d.apply_phi(gens[i - 1]);
    for (int c = 0; c < d.f(); ++c) mu[c] = coefficient_mod(r.flag[i - 1][c], gens[i - 1][c], img[c]);
    out.emplace_back(std::move(mu));
  }
  return out;
}

NFOperator compute_NF(const FilteredPhiNModule& d, const Refinement& r) {
  const int n = r.n();
  const auto gens = graded_generators(r);
  std::vector<Submodule> nf(n + 1);
  for (int i = 0; i <= n; ++i) nf[i] = d.apply_N(r.flag[i]);
  NFOperator op;
  for (int i = 1; i <= n; ++i) {
    NFEntry e;
    e.lambda = SemilinearScalar::constant(d.f(), 0);
    if (same_submodule(nf[i], nf[i - 1])) {
      op.entries.push_back(e);
      continue;
    }
    int j = 1;
    while (j <= n && !contains(sum(nf[i - 1], r.flag[j]), nf[i])) ++j;
    e.target = j;
    const ModuleVector image = d.apply_N(gens[i - 1]);
    for (int c = 0; c < d.f(); ++c) {
      const Subspace lower = sum(nf[i - 1][c], r.flag[j - 1][c]);
      e.lambda[c] = coefficient_mod(lower, gens[j - 1][c], image[c]);
    }
    op.entries.push_back(e);
  }
  return op;
}

bool nf_well_formed(const NFOperator& nf) {
  for (const auto& e : nf.entries) {
    if (e.target == 0 && !e.lambda.is_zero()) return false;
    if (e.target != 0 && !e.lambda.is_unit()) return false;
  }
  return true;
}

bool nf_commutes_with_phi(const FilteredPhiNModule& d, const Refinement& r, const NFOperator& nf) {
  const auto mu = graded_phi(d, r);
  const SemilinearScalar p = SemilinearScalar::constant(d.f(), d.ctx.p());
  for (int i = 1; i <= r.n(); ++i) {
    const NFEntry& e = nf.entries[i - 1];
    if (e.target == 0) continue;
    // N_F(phi v_i) = mu_i lambda_i v_j and p phi(N_F v_i) = p sigma(lambda_i) mu_j v_j.
    if (!(mu[i - 1] * e.lambda == p * frobenius_shift(e.lambda) * mu[e.target - 1])) return false;
  }
  return true;
}

std::vector<int> MarkedIndexMap::marked() const {
  std::vector<int> out;
  for (const auto& [s, t] : t_of) out.push_back(s);
  return out;
}

MarkedIndexMap marked_indices(const NFOperator& nf) {
  MarkedIndexMap m;
  for (size_t i = 0; i < nf.entries.size(); ++i) {
    const int j = nf.entries[i].target;
    if (j == 0) continue;
    m.t_of[j] = static_cast<int>(i) + 1;
    m.s_of[static_cast<int>(i) + 1] = j;
  }
  return m;
}

MarkedIndexMap marked_indices(const FilteredPhiNModule& d, const Refinement& r) {
  return marked_indices(compute_NF(d, r));
}

bool check_marked_criterion(const FilteredPhiNModule& d, const Refinement& r, int s, int t) {
  if (s < 1 || t > r.n() || s >= t) throw Error(ErrorKind::IndexOutOfRange, "need 1 <= s < t <= n");
  const Submodule a = d.apply_N(r.flag[t - 1]);
  const Submodule b = d.apply_N(r.flag[t]);
  for (int c = 0; c < d.f(); ++c) {
    if (intersect(a[c], r.flag[s][c]).dim() != intersect(a[c], r.flag[s - 1][c]).dim()) return false;
    if (intersect(b[c], r.flag[s][c]).dim() <= intersect(b[c], r.flag[s - 1][c]).dim()) return false;
  }
  return true;
}

Refinement dual_refinement(const FilteredPhiNModule& d, const Refinement& r) {
  const int n = r.n();
  std::vector<Submodule> steps;
  for (int i = 1; i <= n; ++i) {
    Submodule s;
    for (const auto& c : r.flag[n - i]) s.push_back(annihilator(c));
    steps.push_back(std::move(s));
  }
  return validate_refinement(dual(d), steps);
}

std::vector<std::vector<SemilinearScalar>> graded_pairing(const FilteredPhiNModule& d, const Refinement& r) {
  const int n = r.n();
  const auto v = graded_generators(r);
  const auto u = graded_generators(dual_refinement(d, r));
  std::vector<std::vector<SemilinearScalar>> g(n, std::vector<SemilinearScalar>(n, SemilinearScalar::constant(d.f(), 0)));
  for (int i = 0; i < n; ++i) {
    const int k = n - 1 - i;
    for (int c = 0; c < d.f(); ++c) g[i][k][c] = dot(u[i][c], v[k][c]);
  }
  return g;
}

bool check_nf_duality(const FilteredPhiNModule& d, const Refinement& r) {
  const int n = r.n();
  const auto g = graded_pairing(d, r);
  for (int i = 0; i < n; ++i)
    if (!g[i][n - 1 - i].is_unit()) return false;
  const Refinement rd = dual_refinement(d, r);
  const NFOperator nf = compute_NF(d, r);
  const NFOperator nfd = compute_NF(dual(d), rd);
  const SemilinearScalar zero = SemilinearScalar::constant(d.f(), 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      SemilinearScalar total = zero;
      const NFEntry& x = nfd.entries[i];
      if (x.target != 0) total = total + x.lambda * g[x.target - 1][k];
      const NFEntry& y = nf.entries[k];
      if (y.target != 0) total = total + y.lambda * g[i][y.target - 1];
      if (!total.is_zero()) return false;
    }
  return true;
}

std::vector<CharacterSketch> refinement_to_parameters(const FilteredPhiNModule& d, const Refinement& r) {
  const GradedData g = graded_data(d, r);
  std::vector<CharacterSketch> out;
  for (int i = 0; i < r.n(); ++i)
    out.push_back({g.alphas[i], g.weights[i], g.alphas[i], "smooth_" + std::to_string(i + 1)});
  return out;
}

}  // namespace phinlab
