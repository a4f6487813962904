#include "phinlab/random_modules.hpp"

#include <algorithm>

#include "phinlab/fixtures.hpp"

namespace phinlab {

Scalar Rng::small_rational(int span) {
  Scalar x(uniform(-span, span), uniform(1, 4));
  x.canonicalize();
  return x;
}

Scalar Rng::nonzero_rational(int span) {
  Scalar x = small_rational(span);
  while (x == 0) x = small_rational(span);
  return x;
}

FieldContext random_context(Rng& rng, int max_degree) {
  static const std::vector<long> primes{2, 3, 5};
  for (;;) {
    const int e = rng.uniform(1, 2), f = rng.uniform(1, 2);
    if (e * f <= max_degree) return FieldContext::make(rng.pick(primes), e, f);
  }
}

Matrix random_invertible(Rng& rng, int n) {
  for (;;) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = rng.chance(40) ? Scalar(0) : Scalar(rng.uniform(-3, 3));
    if (determinant(m) != 0) return m;
  }
}

namespace {

Scalar int_power(long p, int k) {
  Scalar x = 1;
  for (int i = 0; i < std::abs(k); ++i) x *= p;
  return k >= 0 ? x : Scalar(1 / x);
}

// A random element of the solution space of N_c Phi_c = p Phi_c N_{c+1} with
// every N_c strictly upper triangular.
std::vector<Matrix> random_monodromy(Rng& rng, const std::vector<Matrix>& phi, long p) {
  const int f = static_cast<int>(phi.size());
  const int n = phi[0].rows();
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  const int per = static_cast<int>(slots.size());
  std::vector<Matrix> out(f, Matrix(n, n));
  if (per == 0) return out;
  auto var = [per](int c, int k) { return c * per + k; };
  Matrix sys(f * n * n, f * per);
  for (int c = 0; c < f; ++c) {
    const int c1 = (c + 1) % f;
    for (int r = 0; r < n; ++r)
      for (int col = 0; col < n; ++col) {
        const int row = (c * n + r) * n + col;
        for (int k = 0; k < per; ++k) {
          const auto [i, j] = slots[k];
          // (N_c Phi_c)(r, col) gets N_c(i, j) Phi_c(j, col) when i == r.
          if (i == r) sys(row, var(c, k)) += phi[c](j, col);
          // (p Phi_c N_{c+1})(r, col) gets p Phi_c(r, i) N_{c+1}(i, j) when j == col.
          if (j == col) sys(row, var(c1, k)) -= p * phi[c](r, i);
        }
      }
  }
  const auto basis = kernel(sys);
  if (basis.empty() || rng.chance(10)) return out;
  Vec x(f * per);
  for (const auto& b : basis) x = vec_add(x, vec_scale(Scalar(rng.uniform(-2, 2)), b));
  if (vec_is_zero(x)) x = basis[rng.uniform(0, static_cast<int>(basis.size()) - 1)];
  for (int c = 0; c < f; ++c)
    for (int k = 0; k < per; ++k) out[c](slots[k].first, slots[k].second) = x[var(c, k)];
  return out;
}

Filtration random_filtration(Rng& rng, int n) {
  const int steps = rng.uniform(1, n);
  std::vector<int> dims{n};
  std::vector<int> pool;
  for (int d = 1; d < n; ++d) pool.push_back(d);
  std::shuffle(pool.begin(), pool.end(), std::mt19937(rng.uniform(0, 1 << 20)));
  pool.resize(steps - 1);
  std::sort(pool.rbegin(), pool.rend());
  dims.insert(dims.end(), pool.begin(), pool.end());
  const Matrix g = random_invertible(rng, n);
  Filtration fil;
  int jump = rng.uniform(-2, 1);
  for (int d : dims) {
    std::vector<Vec> rows;
    for (int i = 0; i < d; ++i) rows.push_back(g.row(i));
    fil.push_back({jump, Subspace::span(n, rows)});
    jump += rng.uniform(1, 2);
  }
  return fil;
}

RandomInstance conjugate(Rng& rng, const FilteredPhiNModule& d, const Refinement& r) {
  std::vector<Matrix> p;
  const Matrix shared = random_invertible(rng, d.n);
  const bool same = rng.chance(50);
  for (int c = 0; c < d.f(); ++c) p.push_back(same ? shared : random_invertible(rng, d.n));
  RandomInstance out;
  out.d = change_basis(d, p);
  out.r.flag.clear();
  for (const auto& step : r.flag) {
    Submodule s;
    for (int c = 0; c < d.f(); ++c) s.push_back(image(*inverse(p[c]), step[c]));
    out.r.flag.push_back(std::move(s));
  }
  return out;
}

Refinement standard_flag(const FilteredPhiNModule& d) {
  std::vector<Vec> basis;
  for (int k = 0; k < d.n; ++k) basis.push_back(unit_vector(d.n, k));
  return refinement_from_basis(d, basis);
}

}  // namespace

RandomInstance random_instance(Rng& rng, const FieldContext& ctx, const InstanceOptions& opt) {
  const int n = rng.uniform(opt.min_rank, opt.max_rank);
  const int f = ctx.f();
  const long p = ctx.p();
  // phi^f eigenvalue of gr_i is u_i p^{f h_i}; N can only link i < j with
  // alpha_i = alpha_j / p^f.
  std::vector<Scalar> alpha(n);
  for (;;) {
    const int u_choices = opt.distinct_eigenvalues ? 3 : 1;
    for (int i = 0; i < n; ++i) {
      const int u = rng.uniform(1, u_choices) * (rng.chance(20) ? -1 : 1);
      alpha[i] = u * int_power(p, f * rng.uniform(-1, 1));
    }
    if (!opt.distinct_eigenvalues) break;
    std::vector<Scalar> sorted = alpha;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) break;
  }
  const bool diagonal = rng.chance(50);
  std::vector<Matrix> phi(f, Matrix(n, n));
  for (int c = f - 1; c >= 0; --c)
    for (int i = 0; i < n; ++i) {
      if (c > 0) {
        phi[c](i, i) = rng.nonzero_rational(3);
      } else {
        Scalar rest = 1;
        for (int k = 1; k < f; ++k) rest *= phi[k](i, i);
        phi[0](i, i) = alpha[i] / rest;
      }
      if (!diagonal)
        for (int j = i + 1; j < n; ++j)
          if (rng.chance(30)) phi[c](i, j) = rng.small_rational(2);
    }
  FilteredPhiNModule d;
  d.ctx = ctx;
  d.n = n;
  d.phi = phi;
  d.N = random_monodromy(rng, phi, p);
  for (int tau = 0; tau < ctx.degree(); ++tau) d.filtration.push_back(random_filtration(rng, n));
  const Refinement r = standard_flag(d);
  RandomInstance out;
  if (opt.change_basis) {
    out = conjugate(rng, d, r);
  } else {
    out.d = d;
    out.r = r;
  }
  // Diagonal phi with distinct eigenvalues is semisimple; so is diagonal phi
  // on f = 1 regardless.
  std::vector<Scalar> sorted = alpha;
  std::sort(sorted.begin(), sorted.end());
  out.semisimple = diagonal && (f == 1 || std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  return out;
}

RandomInstance random_decomposable_instance(Rng& rng, const FieldContext& ctx) {
  const int n = rng.uniform(3, 4);
  std::vector<Scalar> L;
  std::vector<int> a, b;
  for (int tau = 0; tau < ctx.degree(); ++tau) {
    L.push_back(rng.small_rational());
    a.push_back(rng.uniform(-2, 1));
    b.push_back(a.back() + rng.uniform(1, 3));
  }
  const FilteredPhiNModule d = tensor_source_module(n, L, a, b, ctx);
  return conjugate(rng, d, standard_flag(d));
}

}  // namespace phinlab
