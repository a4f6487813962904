#include "phinlab/linvariant.hpp"

#include "phinlab/error.hpp"

namespace phinlab {

namespace {

// The particular solution, it plus each direction, and it plus all of them.
std::vector<Vec> sample_family(const AffineSolution& sol) {
  std::vector<Vec> out{sol.particular};
  for (const auto& d : sol.directions) out.push_back(vec_add(sol.particular, d));
  if (sol.directions.size() > 1) {
    Vec all = sol.particular;
    for (const auto& d : sol.directions) all = vec_add(all, d);
    out.push_back(all);
  }
  return out;
}

FilteredPhiNModule graded_subquotient(const FilteredPhiNModule& d, const Refinement& r, int s, int t) {
  const auto gens = graded_generators(r);
  std::vector<Matrix> rows(d.f());
  for (int c = 0; c < d.f(); ++c) {
    std::vector<Vec> b = r.flag[s - 1][c].basis();
    for (int k = s; k <= t; ++k) b.push_back(gens[k - 1][c]);
    rows[c] = Matrix::from_rows(b, d.n);
  }
  const FilteredPhiNModule upper = sub(d, rows);
  std::vector<Matrix> lower(d.f()), complement(d.f());
  for (int c = 0; c < d.f(); ++c) {
    std::vector<Vec> lo, co;
    for (int k = 0; k < t; ++k) (k < s - 1 ? lo : co).push_back(unit_vector(t, k));
    lower[c] = Matrix::from_rows(lo, t);
    complement[c] = Matrix::from_rows(co, t);
  }
  return quotient(upper, lower, complement);
}

Matrix rows_matrix(const std::vector<Vec>& rows, int n) { return Matrix::from_rows(rows, n); }

}  // namespace

std::vector<SDecomposition> find_s_decompositions(const FilteredPhiNModule& d, const Refinement& r, int s) {
  const MarkedIndexMap marks = marked_indices(d, r);
  const auto it = marks.t_of.find(s);
  if (it == marks.t_of.end()) throw Error(ErrorKind::NotMarked, "index " + std::to_string(s) + " is not marked");
  const int t = it->second;
  const int m = t - s + 1;
  const FilteredPhiNModule q = graded_subquotient(d, r, s, t);
  const GradedData gd = graded_data(d, r);
  const Matrix a = q.phi_f(0);
  const Matrix& n0 = q.N[0];
  const Scalar alpha = gd.alphas[t - 1];

  // e_t at component 0: (A - alpha) x = 0, N x in E e_1, last coordinate 1.
  Matrix sys(2 * m, m);
  Vec rhs(2 * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) sys(i, j) = a(i, j) - (i == j ? alpha : Scalar(0));
  for (int i = 1; i < m; ++i)
    for (int j = 0; j < m; ++j) sys(m + i - 1, j) = n0(i, j);
  sys(2 * m - 1, m - 1) = 1;
  rhs[2 * m - 1] = 1;
  const auto xs = solve_affine(sys, rhs);
  if (!xs) return {};

  // L = span(e_k + c_k e_1, 1 <= k <= m-2), stable under A and N.
  std::vector<Vec> cs{Vec{}};
  const int nl = m - 2;
  if (nl > 0) {
    Matrix lsys(2 * nl, nl);
    Vec lrhs(2 * nl);
    int row = 0;
    for (const Matrix* x : {&a, &n0})
      for (int k = 1; k <= nl; ++k, ++row) {
        for (int l = 1; l <= nl; ++l) lsys(row, l - 1) = (l == k ? (*x)(0, 0) : Scalar(0)) - (*x)(l, k);
        lrhs[row] = -(*x)(0, k);
      }
    const auto sol = solve_affine(lsys, lrhs);
    if (!sol) return {};
    cs = sample_family(*sol);
  }

  std::vector<SDecomposition> out;
  for (const Vec& x : sample_family(*xs)) {
    const ModuleVector et = q.propagate(x);
    const ModuleVector es = q.apply_N(et);
    if (vec_is_zero(es[0])) continue;
    for (const Vec& c : cs) {
      SDecomposition dec;
      dec.s = s;
      dec.t = t;
      dec.ambient = q;
      dec.e_t = et;
      dec.e_s = es;
      for (int k = 1; k <= nl; ++k) {
        Vec w = unit_vector(m, k);
        w[0] = c[k - 1];
        dec.l_block.push_back(q.propagate(w));
      }
      for (int tau = 0; tau < d.ctx.degree(); ++tau) {
        dec.k_s.push_back(gd.weights[s - 1][tau]);
        dec.k_t.push_back(gd.weights[t - 1][tau]);
      }
      bool duplicate = false;
      for (const auto& prev : out) duplicate = duplicate || (prev.e_t == dec.e_t && prev.l_block == dec.l_block);
      if (!duplicate) out.push_back(std::move(dec));
    }
  }
  return out;
}

std::optional<PerfectWitness> is_perfect(const SDecomposition& dec) {
  const FilteredPhiNModule& q = dec.ambient;
  const int degree = q.ctx.degree();
  for (int tau = 0; tau < degree; ++tau)
    if (dec.k_s[tau] >= dec.k_t[tau]) return std::nullopt;
  const int m = q.n;
  std::vector<Matrix> pair_rows(q.f()), l_rows(q.f());
  for (int c = 0; c < q.f(); ++c) {
    pair_rows[c] = rows_matrix({dec.e_s[c], dec.e_t[c]}, m);
    std::vector<Vec> lr;
    for (const auto& v : dec.l_block) lr.push_back(v[c]);
    l_rows[c] = rows_matrix(lr, m);
  }
  const FilteredPhiNModule pair = sub(q, pair_rows);
  const FilteredPhiNModule modl = quotient(q, l_rows, pair_rows);

  PerfectWitness w;
  const Subspace full = Subspace::full(2), zero = Subspace::zero(2);
  for (int tau = 0; tau < degree; ++tau) {
    const int ks = dec.k_s[tau], kt = dec.k_t[tau];
    const Subspace line = fil_at(pair.filtration[tau], ks + 1, 2);
    if (line.dim() != 1) return std::nullopt;
    const Vec& v = line.basis()[0];
    if (v[1] == 0) return std::nullopt;
    const Scalar L = v[0] / v[1];
    const Subspace ell = Subspace::span(2, {{L, Scalar(1)}});
    bool found = false;
    for (int ksp = ks; ksp <= kt && !found; ++ksp)
      for (int ktp = ksp + 1; ktp <= kt && !found; ++ktp) {
        bool ok = true;
        for (int i = ks - 1; i <= kt + 1 && ok; ++i) {
          const Subspace& want_sub = i <= ks ? full : (i <= ktp ? ell : zero);
          const Subspace& want_quo = i <= ksp ? full : (i <= kt ? ell : zero);
          ok = fil_at(pair.filtration[tau], i, 2) == want_sub && fil_at(modl.filtration[tau], i, 2) == want_quo;
        }
        if (ok) {
          found = true;
          w.k_s_prime.push_back(ksp);
          w.k_t_prime.push_back(ktp);
          w.L.push_back(L);
        }
      }
    if (!found) return std::nullopt;
  }
  return w;
}

namespace {

int partner(const FilteredPhiNModule& d, const Refinement& r, int s) {
  const MarkedIndexMap marks = marked_indices(d, r);
  const auto it = marks.t_of.find(s);
  return it == marks.t_of.end() ? 0 : it->second;
}

}  // namespace

LInvariant l_invariant(const FilteredPhiNModule& d, const Refinement& r, int s, int t) {
  if (partner(d, r, s) != t || t == 0)
    throw Error(ErrorKind::NotStronglyMarked, "(" + std::to_string(s) + ", " + std::to_string(t) + ") is not a marked pair");
  for (const auto& dec : find_s_decompositions(d, r, s))
    if (auto w = is_perfect(dec)) return w->L;
  throw Error(ErrorKind::NotStronglyMarked, "no perfect " + std::to_string(s) + "-decomposition");
}

bool is_strongly_marked(const FilteredPhiNModule& d, const Refinement& r, int s) {
  if (partner(d, r, s) == 0) return false;
  for (const auto& dec : find_s_decompositions(d, r, s))
    if (is_perfect(dec)) return true;
  return false;
}

WellDefinedReport check_well_defined(const FilteredPhiNModule& d, const Refinement& r, int s, int t) {
  if (partner(d, r, s) != t || t == 0)
    throw Error(ErrorKind::NotStronglyMarked, "(" + std::to_string(s) + ", " + std::to_string(t) + ") is not a marked pair");
  WellDefinedReport rep;
  const auto decs = find_s_decompositions(d, r, s);
  rep.decompositions = static_cast<int>(decs.size());
  for (const auto& dec : decs) {
    const auto w = is_perfect(dec);
    if (!w) continue;
    if (rep.perfect == 0)
      rep.value = w->L;
    else if (w->L != rep.value)
      rep.consistent = false;
    ++rep.perfect;
  }
  if (rep.perfect == 0) throw Error(ErrorKind::NotStronglyMarked, "no perfect " + std::to_string(s) + "-decomposition");
  return rep;
}

DualityReport duality_transport(const FilteredPhiNModule& d, const Refinement& r, int s) {
  const int t = partner(d, r, s);
  if (t == 0) throw Error(ErrorKind::NotMarked, "index " + std::to_string(s) + " is not marked");
  const int n = r.n();
  DualityReport rep;
  rep.s = s;
  rep.t = t;
  rep.dual_s = n + 1 - t;
  rep.dual_t = n + 1 - s;
  const FilteredPhiNModule dd = dual(d);
  const Refinement rd = dual_refinement(d, r);
  rep.dual_marked = partner(dd, rd, rep.dual_s) == rep.dual_t;
  rep.strongly = is_strongly_marked(d, r, s);
  rep.dual_strongly = is_strongly_marked(dd, rd, rep.dual_s);
  return rep;
}

}  // namespace phinlab
