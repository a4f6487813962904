#pragma once

#include <vector>

#include "phinlab/matrix.hpp"

namespace phinlab {

/// A subspace of E^n held by its reduced row echelon basis, so equal subspaces
/// have identical representations.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(int n) { return Subspace(n); }
  static Subspace full(int n);
  static Subspace span(int n, const std::vector<Vec>& vectors);
  static Subspace span(const Matrix& rows) { return span(rows.cols(), rows.row_list()); }

  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }
  Matrix basis_matrix() const { return Matrix::from_rows(basis_, n_); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return dim() == n_; }

  /// Coordinates of v in the stored basis; v must lie in the subspace.
  Vec coordinates(const Vec& v) const;

  friend bool operator==(const Subspace& x, const Subspace& y) { return x.n_ == y.n_ && x.basis_ == y.basis_; }
  friend bool operator!=(const Subspace& x, const Subspace& y) { return !(x == y); }

 private:
  explicit Subspace(int n) : n_(n) {}
  int n_ = 0;
  std::vector<Vec> basis_;
};

Subspace sum(const Subspace& x, const Subspace& y);
Subspace intersect(const Subspace& x, const Subspace& y);
/// {y : <y, x> = 0 for all x in s}.
Subspace annihilator(const Subspace& s);
/// {m x : x in s}.
Subspace image(const Matrix& m, const Subspace& s);

/// First vector of `big`'s basis that is not in `small`; `small` must be a
/// proper subspace of `big`.
Vec first_outside(const Subspace& big, const Subspace& small);

}  // namespace phinlab
