#pragma once

// Dense exact matrices over Scalar. Vectors are columns when a matrix acts on
// them; bases of subspaces are stored as rows.

#include <optional>
#include <string>
#include <vector>

#include "phinlab/exact.hpp"

namespace phinlab {

using Vec = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static Matrix identity(int n);
  static Matrix diagonal(const Vec& d);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);
  static Matrix from_columns(const std::vector<Vec>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  std::vector<Vec> row_list() const;
  bool is_zero() const;

  Matrix transpose() const;
  Matrix block(int r0, int c0, int nr, int nc) const;

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> a_;
};

Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator*(const Scalar& c, const Matrix& x);
Vec operator*(const Matrix& m, const Vec& v);

Vec vec_add(const Vec& x, const Vec& y);
Vec vec_sub(const Vec& x, const Vec& y);
Vec vec_scale(const Scalar& c, const Vec& x);
Scalar dot(const Vec& x, const Vec& y);
bool vec_is_zero(const Vec& v);
Vec unit_vector(int n, int i);

struct RrefResult {
  Matrix reduced;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

RrefResult rref(const Matrix& m);
int rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vec> kernel(const Matrix& m);

/// Some x with m x = b, or nullopt.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Particular solution plus kernel basis of m x = b.
struct AffineSolution {
  Vec particular;
  std::vector<Vec> directions;
};
std::optional<AffineSolution> solve_affine(const Matrix& m, const Vec& b);

std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(const Matrix& m);
Matrix kron(const Matrix& x, const Matrix& y);
Matrix power(const Matrix& m, int k);

/// Monic characteristic polynomial, coefficients c[0] + c[1] x + ... + x^n.
std::vector<Scalar> characteristic_polynomial(const Matrix& m);

struct RationalRoot {
  Scalar value;
  int multiplicity;
};

/// Rational roots of a polynomial (low-to-high coefficients) with multiplicity,
/// sorted ascending. `unsplit_degree` receives the degree of the remaining
/// factor with no rational roots.
std::vector<RationalRoot> rational_roots(std::vector<Scalar> poly, int* unsplit_degree);

std::string format_matrix(const Matrix& m);

}  // namespace phinlab
