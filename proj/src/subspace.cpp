#include "phinlab/subspace.hpp"

#include "phinlab/error.hpp"

namespace phinlab {

Subspace Subspace::full(int n) {
  Subspace s(n);
  for (int i = 0; i < n; ++i) s.basis_.push_back(unit_vector(n, i));
  return s;
}

Subspace Subspace::span(int n, const std::vector<Vec>& vectors) {
  Subspace s(n);
  if (vectors.empty()) return s;
  const RrefResult rr = rref(Matrix::from_rows(vectors, n));
  for (size_t r = 0; r < rr.pivots.size(); ++r) s.basis_.push_back(rr.reduced.row(static_cast<int>(r)));
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != n_) throw Error(ErrorKind::ValidationError, "vector length does not match ambient dimension");
  std::vector<Vec> rows = basis_;
  rows.push_back(v);
  return rank(Matrix::from_rows(rows, n_)) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  auto x = solve(basis_matrix().transpose(), v);
  if (!x) throw Error(ErrorKind::ValidationError, "vector is not in the subspace");
  return *x;
}

Subspace sum(const Subspace& x, const Subspace& y) {
  std::vector<Vec> rows = x.basis();
  rows.insert(rows.end(), y.basis().begin(), y.basis().end());
  return Subspace::span(x.ambient(), rows);
}

Subspace annihilator(const Subspace& s) {
  if (s.is_zero()) return Subspace::full(s.ambient());
  return Subspace::span(s.ambient(), kernel(s.basis_matrix()));
}

Subspace intersect(const Subspace& x, const Subspace& y) {
  return annihilator(sum(annihilator(x), annihilator(y)));
}

Subspace image(const Matrix& m, const Subspace& s) {
  std::vector<Vec> rows;
  for (const auto& v : s.basis()) rows.push_back(m * v);
  return Subspace::span(m.rows(), rows);
}

Vec first_outside(const Subspace& big, const Subspace& small) {
  for (const auto& v : big.basis())
    if (!small.contains(v)) return v;
  throw Error(ErrorKind::ValidationError, "subspace is not proper");
}

}  // namespace phinlab
