#include "phinlab/fixtures.hpp"

#include "phinlab/error.hpp"

namespace phinlab {

namespace {

void require_per_tau(const std::vector<Scalar>& L, const FieldContext& ctx) {
  if (static_cast<int>(L.size()) != ctx.degree())
    throw Error(ErrorKind::ValidationError, "L needs one entry per embedding");
}

}  // namespace

FilteredPhiNModule auxiliary_module(const std::vector<Scalar>& L, const FieldContext& ctx, int lowest_jump) {
  require_per_tau(L, ctx);
  if (lowest_jump >= 0) throw Error(ErrorKind::ValidationError, "lowest jump must be negative");
  FilteredPhiNModule d;
  d.ctx = ctx;
  d.n = 3;
  Matrix nm(3, 3);
  nm(0, 1) = -1;
  nm(0, 2) = 1;
  for (int c = 0; c < ctx.f(); ++c) {
    d.phi.push_back(Matrix::diagonal({Scalar(1, ctx.p()), Scalar(1), Scalar(1)}));
    d.N.push_back(nm);
  }
  for (int tau = 0; tau < ctx.degree(); ++tau) {
    const Subspace fil0 = Subspace::span(3, {{-L[tau], Scalar(1), Scalar(0)}, {L[tau], Scalar(0), Scalar(1)}});
    d.filtration.push_back({{lowest_jump, Subspace::full(3)}, {0, fil0}});
  }
  return d;
}

Refinement auxiliary_refinement(const FilteredPhiNModule& d, const std::vector<int>& order) {
  std::vector<Vec> basis;
  for (int k : order) basis.push_back(unit_vector(3, k - 1));
  return refinement_from_basis(d, basis);
}

FilteredPhiNModule tensor_source_module(int n, const std::vector<Scalar>& L, const std::vector<int>& a,
                                        const std::vector<int>& b, const FieldContext& ctx) {
  require_per_tau(L, ctx);
  if (n < 2) throw Error(ErrorKind::ValidationError, "source module needs rank at least 2");
  if (static_cast<int>(a.size()) != ctx.degree() || static_cast<int>(b.size()) != ctx.degree())
    throw Error(ErrorKind::ValidationError, "weights need one entry per embedding");
  FilteredPhiNModule d;
  d.ctx = ctx;
  d.n = n;
  Vec diag(n, Scalar(1));
  diag[0] = Scalar(1, ctx.p());
  Matrix nm(n, n);
  nm(0, n - 1) = 1;
  for (int c = 0; c < ctx.f(); ++c) {
    d.phi.push_back(Matrix::diagonal(diag));
    d.N.push_back(nm);
  }
  std::vector<Vec> middle;
  for (int k = 1; k < n - 1; ++k) middle.push_back(unit_vector(n, k));
  for (int tau = 0; tau < ctx.degree(); ++tau) {
    if (a[tau] >= b[tau]) throw Error(ErrorKind::ValidationError, "need a < b at every embedding");
    Vec line = unit_vector(n, n - 1);
    line[0] = L[tau];
    std::vector<Vec> upper = middle;
    upper.push_back(line);
    Filtration fil{{a[tau], Subspace::full(n)}, {b[tau], Subspace::span(n, upper)}};
    if (!middle.empty()) fil.push_back({b[tau] + 1, Subspace::span(n, middle)});
    d.filtration.push_back(std::move(fil));
  }
  return d;
}

TensorFixtures tensor_fixtures(const FilteredPhiNModule& d, const Refinement& r) {
  const int n = d.n;
  const auto marks = marked_indices(d, r);
  const auto it = marks.t_of.find(1);
  if (n < 2 || it == marks.t_of.end() || it->second != n)
    throw Error(ErrorKind::NoPerfectDecomposition, "(1, n) is not a marked pair");
  std::optional<SDecomposition> chosen;
  std::optional<PerfectWitness> witness;
  for (auto& dec : find_s_decompositions(d, r, 1)) {
    witness = is_perfect(dec);
    if (witness) {
      chosen = std::move(dec);
      break;
    }
  }
  if (!chosen) throw Error(ErrorKind::NoPerfectDecomposition, "no perfect 1-decomposition");

  // Rebase the ambient F_n/F_0 onto (e_s, L, e_t).
  const FilteredPhiNModule& q = chosen->ambient;
  std::vector<Matrix> basis(q.f());
  for (int c = 0; c < q.f(); ++c) {
    std::vector<Vec> cols{chosen->e_s[c]};
    for (const auto& l : chosen->l_block) cols.push_back(l[c]);
    cols.push_back(chosen->e_t[c]);
    basis[c] = Matrix::from_columns(cols, n);
  }
  const FilteredPhiNModule db = change_basis(q, basis);

  std::vector<Matrix> mid(q.f()), ends(q.f());
  for (int c = 0; c < q.f(); ++c) {
    std::vector<Vec> m;
    for (int k = 1; k < n - 1; ++k) m.push_back(unit_vector(n, k));
    mid[c] = Matrix::from_rows(m, n);
    ends[c] = Matrix::from_rows({unit_vector(n, 0), unit_vector(n, n - 1)}, n);
  }
  const FilteredPhiNModule d1 = quotient(db, mid, ends);
  const FilteredPhiNModule d2 = quotient(dual(db), mid, ends);
  TensorFixtures out;
  out.big = tensor(d2, d1);
  std::vector<Matrix> block_rows(q.f(), Matrix::from_rows({unit_vector(4, 0), unit_vector(4, 2), unit_vector(4, 3)}, 4));
  out.block = sub(out.big, block_rows);
  out.witness = *witness;
  out.k_s = chosen->k_s;
  out.k_t = chosen->k_t;
  return out;
}

TensorFixtures tensor_fixtures(int n, const std::vector<Scalar>& L, const std::vector<int>& a, const std::vector<int>& b,
                               const FieldContext& ctx) {
  const FilteredPhiNModule d = tensor_source_module(n, L, a, b, ctx);
  std::vector<Vec> basis;
  for (int k = 0; k < n; ++k) basis.push_back(unit_vector(n, k));
  return tensor_fixtures(d, refinement_from_basis(d, basis));
}

FilteredPhiNModule tensor_block_closed_form(const FieldContext& ctx, const std::vector<int>& k_s,
                                            const std::vector<int>& k_t, const PerfectWitness& w) {
  FilteredPhiNModule d;
  d.ctx = ctx;
  d.n = 3;
  Matrix nm(3, 3);
  nm(1, 0) = -1;
  nm(1, 2) = 1;
  for (int c = 0; c < ctx.f(); ++c) {
    d.phi.push_back(Matrix::diagonal({Scalar(1), Scalar(1, ctx.p()), Scalar(1)}));
    d.N.push_back(nm);
  }
  for (int tau = 0; tau < ctx.degree(); ++tau) {
    const Scalar& L = w.L.at(tau);
    const Vec a{Scalar(0), L, Scalar(1)};
    const Vec b{Scalar(1), -L, Scalar(0)};
    const int whole = w.k_s_prime[tau] - w.k_t_prime[tau];
    const int with_a = k_t[tau] - w.k_t_prime[tau];
    const int with_b = w.k_s_prime[tau] - k_s[tau];
    d.filtration.push_back(make_filtration(3, {whole, with_a, with_b}, [&](int i) {
      if (i <= whole) return Subspace::full(3);
      std::vector<Vec> rows;
      if (i <= with_a) rows.push_back(a);
      if (i <= with_b) rows.push_back(b);
      return Subspace::span(3, rows);
    }));
  }
  return d;
}

}  // namespace phinlab
