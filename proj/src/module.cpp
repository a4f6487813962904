#include "phinlab/module.hpp"

#include <algorithm>
#include <set>

#include "phinlab/error.hpp"

namespace phinlab {

Subspace fil_at(const Filtration& fil, int i, int n) {
  for (const auto& step : fil)
    if (i <= step.jump) return step.space;
  return Subspace::zero(n);
}

std::vector<int> filtration_weights(const Filtration& fil) {
  std::vector<int> out;
  for (size_t k = 0; k < fil.size(); ++k) {
    const int next = k + 1 < fil.size() ? fil[k + 1].space.dim() : 0;
    for (int m = 0; m < fil[k].space.dim() - next; ++m) out.push_back(fil[k].jump);
  }
  return out;
}

Filtration make_filtration(int n, std::vector<int> candidates, const std::function<Subspace(int)>& fil) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  Filtration steps;
  for (int j : candidates) {
    Subspace v = fil(j);
    if (v.is_zero()) break;
    if (!steps.empty() && steps.back().space == v)
      steps.back().jump = j;
    else
      steps.push_back({j, std::move(v)});
  }
  if (n > 0 && (steps.empty() || !steps.front().space.is_full()))
    throw Error(ErrorKind::ValidationError, "filtration is not exhaustive at its lowest candidate jump");
  return steps;
}

Matrix FilteredPhiNModule::phi_f(int c) const {
  Matrix m = Matrix::identity(n);
  for (int k = 0; k < f(); ++k) m = m * phi.at((c + k) % f());
  return m;
}

Submodule FilteredPhiNModule::apply_phi(const Submodule& w) const {
  Submodule out(f());
  for (int c = 0; c < f(); ++c) out[c] = image(phi[c], w[(c + 1) % f()]);
  return out;
}

Submodule FilteredPhiNModule::apply_N(const Submodule& w) const {
  Submodule out(f());
  for (int c = 0; c < f(); ++c) out[c] = image(N[c], w[c]);
  return out;
}

ModuleVector FilteredPhiNModule::apply_phi(const ModuleVector& v) const {
  ModuleVector out(f());
  for (int c = 0; c < f(); ++c) out[c] = phi[c] * v[(c + 1) % f()];
  return out;
}

ModuleVector FilteredPhiNModule::apply_N(const ModuleVector& v) const {
  ModuleVector out(f());
  for (int c = 0; c < f(); ++c) out[c] = N[c] * v[c];
  return out;
}

Submodule FilteredPhiNModule::propagate(const Subspace& w0) const {
  Submodule w(f());
  w[0] = w0;
  for (int c = f() - 1; c >= 1; --c) w[c] = image(phi[c], w[(c + 1) % f()]);
  return w;
}

ModuleVector FilteredPhiNModule::propagate(const Vec& v0) const {
  ModuleVector v(f());
  v[0] = v0;
  for (int c = f() - 1; c >= 1; --c) v[c] = phi[c] * v[(c + 1) % f()];
  return v;
}

ValidationReport validate(const FilteredPhiNModule& d) {
  ValidationReport rep;
  const int f = d.f();
  const int n = d.n;
  auto square_n = [n](const Matrix& m) { return m.rows() == n && m.cols() == n; };
  bool shapes = static_cast<int>(d.phi.size()) == f && static_cast<int>(d.N.size()) == f &&
                static_cast<int>(d.filtration.size()) == d.ctx.degree();
  if (shapes)
    for (int c = 0; c < f; ++c) shapes = shapes && square_n(d.phi[c]) && square_n(d.N[c]);
  if (!shapes) {
    rep.violations.push_back("shape");
    return rep;
  }
  for (int c = 0; c < f; ++c)
    if (determinant(d.phi[c]) == 0) {
      rep.violations.push_back("phi invertible");
      break;
    }
  const Scalar p(d.ctx.p());
  for (int c = 0; c < f; ++c)
    if (d.N[c] * d.phi[c] != p * (d.phi[c] * d.N[(c + 1) % f])) {
      rep.violations.push_back("phi-N relation");
      break;
    }
  for (int c = 0; c < f; ++c)
    if (!power(d.N[c], n).is_zero()) {
      rep.violations.push_back("nilpotent");
      break;
    }
  for (const auto& fil : d.filtration) {
    bool ok = n == 0 ? fil.empty() : (!fil.empty() && fil.front().space.ambient() == n && fil.front().space.is_full());
    for (size_t k = 0; ok && k < fil.size(); ++k) {
      ok = fil[k].space.ambient() == n && !fil[k].space.is_zero();
      if (ok && k > 0)
        ok = fil[k].jump > fil[k - 1].jump && fil[k - 1].space.contains(fil[k].space) &&
             fil[k].space.dim() < fil[k - 1].space.dim();
    }
    if (!ok) {
      rep.violations.push_back("filtration flag");
      break;
    }
  }
  return rep;
}

void require_valid(const FilteredPhiNModule& d) {
  const ValidationReport rep = validate(d);
  if (!rep.ok()) throw Error(ErrorKind::ValidationError, "violated invariant: " + rep.violations.front());
}

bool is_free(const Submodule& w) { return submodule_rank(w) >= 0; }

int submodule_rank(const Submodule& w) {
  if (w.empty()) return 0;
  for (const auto& s : w)
    if (s.dim() != w.front().dim()) return -1;
  return w.front().dim();
}

bool contains(const Submodule& big, const Submodule& small) {
  for (size_t c = 0; c < big.size(); ++c)
    if (!big[c].contains(small.at(c))) return false;
  return true;
}

Submodule sum(const Submodule& x, const Submodule& y) {
  Submodule out(x.size());
  for (size_t c = 0; c < x.size(); ++c) out[c] = sum(x[c], y.at(c));
  return out;
}

Submodule intersect(const Submodule& x, const Submodule& y) {
  Submodule out(x.size());
  for (size_t c = 0; c < x.size(); ++c) out[c] = intersect(x[c], y.at(c));
  return out;
}

bool is_stable(const FilteredPhiNModule& d, const Submodule& w) {
  return contains(w, d.apply_phi(w)) && contains(w, d.apply_N(w));
}

FilteredPhiNModule construct_rank1(const Scalar& a, const std::vector<int>& jumps, const FieldContext& ctx) {
  if (a == 0) throw Error(ErrorKind::ZeroFrobenius, "rank-1 Frobenius must be a unit");
  if (static_cast<int>(jumps.size()) != ctx.degree())
    throw Error(ErrorKind::ValidationError, "need one jump per embedding");
  FilteredPhiNModule d;
  d.ctx = ctx;
  d.n = 1;
  for (int c = 0; c < ctx.f(); ++c) {
    d.phi.push_back(Matrix::diagonal({c == 0 ? a : Scalar(1)}));
    d.N.push_back(Matrix(1, 1));
  }
  for (int k : jumps) d.filtration.push_back({{k, Subspace::full(1)}});
  return d;
}

FilteredPhiNModule unit_object(const FieldContext& ctx) {
  return construct_rank1(1, std::vector<int>(ctx.degree(), 0), ctx);
}

namespace {

Subspace tensor_spaces(const Subspace& x, const Subspace& y) {
  std::vector<Vec> rows;
  for (const auto& u : x.basis())
    for (const auto& v : y.basis()) rows.push_back(kron(Matrix::from_columns({u}, x.ambient()), Matrix::from_columns({v}, y.ambient())).col(0));
  return Subspace::span(x.ambient() * y.ambient(), rows);
}

std::vector<int> jumps_of(const Filtration& fil) {
  std::vector<int> out;
  for (const auto& s : fil) out.push_back(s.jump);
  return out;
}

void require_same_context(const FilteredPhiNModule& a, const FilteredPhiNModule& b) {
  if (!(a.ctx == b.ctx)) throw Error(ErrorKind::ContextMismatch, "modules live over different (p, e, f)");
}

}  // namespace

FilteredPhiNModule tensor(const FilteredPhiNModule& d1, const FilteredPhiNModule& d2) {
  require_same_context(d1, d2);
  FilteredPhiNModule d;
  d.ctx = d1.ctx;
  d.n = d1.n * d2.n;
  const Matrix i1 = Matrix::identity(d1.n), i2 = Matrix::identity(d2.n);
  for (int c = 0; c < d.f(); ++c) {
    d.phi.push_back(kron(d1.phi[c], d2.phi[c]));
    d.N.push_back(kron(d1.N[c], i2) + kron(i1, d2.N[c]));
  }
  for (int tau = 0; tau < d.ctx.degree(); ++tau) {
    const Filtration& f1 = d1.filtration[tau];
    const Filtration& f2 = d2.filtration[tau];
    std::vector<int> candidates;
    for (const auto& a : f1)
      for (const auto& b : f2) candidates.push_back(a.jump + b.jump);
    d.filtration.push_back(make_filtration(d.n, candidates, [&](int i) {
      Subspace acc = Subspace::zero(d.n);
      for (const auto& a : f1) acc = sum(acc, tensor_spaces(a.space, fil_at(f2, i - a.jump, d2.n)));
      return acc;
    }));
  }
  return d;
}

FilteredPhiNModule dual(const FilteredPhiNModule& d) {
  FilteredPhiNModule out;
  out.ctx = d.ctx;
  out.n = d.n;
  for (int c = 0; c < d.f(); ++c) {
    auto inv = inverse(d.phi[c]);
    if (!inv) throw Error(ErrorKind::ValidationError, "phi is not invertible");
    out.phi.push_back(inv->transpose());
    out.N.push_back(Scalar(-1) * d.N[c].transpose());
  }
  for (const auto& fil : d.filtration) {
    std::vector<int> candidates;
    for (int j : jumps_of(fil)) candidates.push_back(-j);
    if (candidates.empty()) candidates.push_back(0);
    out.filtration.push_back(
        make_filtration(d.n, candidates, [&](int i) { return annihilator(fil_at(fil, 1 - i, d.n)); }));
  }
  return out;
}

FilteredPhiNModule change_basis(const FilteredPhiNModule& d, const std::vector<Matrix>& basis) {
  const int f = d.f();
  std::vector<Matrix> inv(f);
  for (int c = 0; c < f; ++c) {
    auto i = inverse(basis.at(c));
    if (!i) throw Error(ErrorKind::NotFree, "basis change is singular on component " + std::to_string(c));
    inv[c] = *i;
  }
  FilteredPhiNModule out;
  out.ctx = d.ctx;
  out.n = d.n;
  for (int c = 0; c < f; ++c) {
    out.phi.push_back(inv[c] * d.phi[c] * basis[(c + 1) % f]);
    out.N.push_back(inv[c] * d.N[c] * basis[c]);
  }
  for (int tau = 0; tau < d.ctx.degree(); ++tau) {
    const Matrix& m = inv[d.component_of(tau)];
    Filtration fil;
    for (const auto& step : d.filtration[tau]) fil.push_back({step.jump, image(m, step.space)});
    out.filtration.push_back(std::move(fil));
  }
  return out;
}

namespace {

// Rows of `rows` followed by `extra` rows, or by greedy unit vectors when none
// are supplied; returned as a column-basis matrix.
Matrix completed_basis(const Matrix& rows, const Matrix* extra, int n) {
  std::vector<Vec> all = rows.row_list();
  if (extra) {
    const auto more = extra->row_list();
    all.insert(all.end(), more.begin(), more.end());
  } else {
    Subspace span = Subspace::span(n, all);
    for (int i = 0; i < n && span.dim() < n; ++i) {
      const Vec e = unit_vector(n, i);
      if (!span.contains(e)) {
        all.push_back(e);
        span = sum(span, Subspace::span(n, {e}));
      }
    }
  }
  if (static_cast<int>(all.size()) != n) throw Error(ErrorKind::NotFree, "basis and complement do not have total size n");
  return Matrix::from_rows(all, n).transpose();
}

struct BlockSplit {
  FilteredPhiNModule rebased;
  int m;
};

BlockSplit split_along(const FilteredPhiNModule& d, const std::vector<Matrix>& basis_rows,
                       const std::optional<std::vector<Matrix>>& complement_rows) {
  const int f = d.f();
  if (static_cast<int>(basis_rows.size()) != f) throw Error(ErrorKind::ValidationError, "need one basis per component");
  const int m = basis_rows[0].rows();
  for (int c = 0; c < f; ++c) {
    if (basis_rows[c].rows() != m || basis_rows[c].cols() != d.n || (m > 0 && rank(basis_rows[c]) != m))
      throw Error(ErrorKind::NotFree, "submodule basis is not free of constant rank over K0 (x) E");
  }
  std::vector<Matrix> p(f);
  for (int c = 0; c < f; ++c)
    p[c] = completed_basis(basis_rows[c], complement_rows ? &complement_rows->at(c) : nullptr, d.n);
  BlockSplit split{change_basis(d, p), m};
  for (int c = 0; c < f; ++c) {
    const Matrix& ph = split.rebased.phi[c];
    const Matrix& nn = split.rebased.N[c];
    if (!ph.block(m, 0, d.n - m, m).is_zero()) throw Error(ErrorKind::NotStable, "submodule is not phi-stable");
    if (!nn.block(m, 0, d.n - m, m).is_zero()) throw Error(ErrorKind::NotStable, "submodule is not N-stable");
  }
  return split;
}

std::vector<Matrix> rows_of(const Submodule& w) {
  if (!is_free(w)) throw Error(ErrorKind::NotFree, "submodule components have different dimensions");
  std::vector<Matrix> out;
  for (const auto& s : w) out.push_back(s.basis_matrix());
  return out;
}

}  // namespace

FilteredPhiNModule sub(const FilteredPhiNModule& d, const std::vector<Matrix>& basis_rows) {
  const BlockSplit split = split_along(d, basis_rows, std::nullopt);
  const int m = split.m;
  const FilteredPhiNModule& r = split.rebased;
  FilteredPhiNModule out;
  out.ctx = d.ctx;
  out.n = m;
  for (int c = 0; c < d.f(); ++c) {
    out.phi.push_back(r.phi[c].block(0, 0, m, m));
    out.N.push_back(r.N[c].block(0, 0, m, m));
  }
  std::vector<Vec> head;
  for (int i = 0; i < m; ++i) head.push_back(unit_vector(d.n, i));
  const Subspace head_span = Subspace::span(d.n, head);
  for (const auto& fil : r.filtration) {
    out.filtration.push_back(make_filtration(m, jumps_of(fil), [&](int i) {
      std::vector<Vec> rows;
      const Subspace inside = intersect(fil_at(fil, i, d.n), head_span);
      for (const auto& v : inside.basis()) rows.emplace_back(v.begin(), v.begin() + m);
      return Subspace::span(m, rows);
    }));
  }
  return out;
}

FilteredPhiNModule sub(const FilteredPhiNModule& d, const Submodule& w) { return sub(d, rows_of(w)); }

FilteredPhiNModule quotient(const FilteredPhiNModule& d, const std::vector<Matrix>& basis_rows,
                            const std::optional<std::vector<Matrix>>& complement_rows) {
  const BlockSplit split = split_along(d, basis_rows, complement_rows);
  const int m = split.m;
  const int q = d.n - m;
  const FilteredPhiNModule& r = split.rebased;
  FilteredPhiNModule out;
  out.ctx = d.ctx;
  out.n = q;
  for (int c = 0; c < d.f(); ++c) {
    out.phi.push_back(r.phi[c].block(m, m, q, q));
    out.N.push_back(r.N[c].block(m, m, q, q));
  }
  for (const auto& fil : r.filtration) {
    if (q == 0) {
      out.filtration.emplace_back();
      continue;
    }
    out.filtration.push_back(make_filtration(q, jumps_of(fil), [&](int i) {
      std::vector<Vec> rows;
      const Subspace step = fil_at(fil, i, d.n);
      for (const auto& v : step.basis()) rows.emplace_back(v.begin() + m, v.end());
      return Subspace::span(q, rows);
    }));
  }
  return out;
}

FilteredPhiNModule quotient(const FilteredPhiNModule& d, const Submodule& w) { return quotient(d, rows_of(w)); }

Scalar newton_number(const FilteredPhiNModule& d) {
  if (d.n == 0) return 0;
  const auto v = p_valuation(determinant(d.phi_f(0)), d.ctx.p());
  if (!v) throw Error(ErrorKind::ValidationError, "phi^f is singular");
  return Scalar(*v);
}

Scalar hodge_number(const FilteredPhiNModule& d) {
  Scalar total = 0;
  for (const auto& fil : d.filtration)
    for (int w : filtration_weights(fil)) total += w;
  return total / d.ctx.degree();
}

std::vector<std::vector<int>> hodge_tate_weights(const FilteredPhiNModule& d) {
  std::vector<std::vector<int>> out;
  for (const auto& fil : d.filtration) out.push_back(filtration_weights(fil));
  return out;
}

std::vector<Eigenpair> distinct_phi_f_eigenpairs(const FilteredPhiNModule& d) {
  const Matrix a = d.phi_f(0);
  int unsplit = 0;
  const auto roots = rational_roots(characteristic_polynomial(a), &unsplit);
  for (const auto& r : roots)
    if (r.multiplicity > 1)
      throw Error(ErrorKind::EigenvalueDegeneracy, "phi^f has repeated eigenvalue " + r.value.get_str());
  if (unsplit > 0) throw Error(ErrorKind::EigenvaluesNotRational, "phi^f has eigenvalues outside E");
  std::vector<Eigenpair> out;
  for (const auto& r : roots) {
    const auto ker = kernel(a - r.value * Matrix::identity(d.n));
    out.push_back({r.value, ker.at(0)});
  }
  return out;
}

AdmissibilityResult is_weakly_admissible(const FilteredPhiNModule& d) {
  AdmissibilityResult res;
  res.t_H = hodge_number(d);
  res.t_N = newton_number(d);
  const auto eig = distinct_phi_f_eigenpairs(d);
  const unsigned full = (1u << d.n) - 1;
  res.admissible = true;
  for (unsigned mask = 1; mask <= full; ++mask) {
    std::vector<Vec> vecs;
    for (int i = 0; i < d.n; ++i)
      if (mask & (1u << i)) vecs.push_back(eig[i].vector);
    const Submodule w = d.propagate(Subspace::span(d.n, vecs));
    if (!contains(w, d.apply_N(w))) continue;
    ++res.stable_submodules;
    const FilteredPhiNModule s = sub(d, w);
    const Scalar th = hodge_number(s), tn = newton_number(s);
    const bool bad = mask == full ? th != tn : th > tn;
    if (bad && res.admissible) {
      res.admissible = false;
      res.witness = w;
    }
  }
  return res;
}

}  // namespace phinlab
