#include "phinlab/matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "phinlab/error.hpp"

namespace phinlab {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vec& d) {
  const int n = static_cast<int>(d.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      throw Error(ErrorKind::ValidationError, "row length does not match column count");
    for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, int rows) {
  return from_rows(cols, rows).transpose();
}

Vec Matrix::row(int i) const {
  return Vec(a_.begin() + static_cast<long>(i) * cols_, a_.begin() + static_cast<long>(i + 1) * cols_);
}

Vec Matrix::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<Vec> Matrix::row_list() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (int i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& x) { return x == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
  Matrix b(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

namespace {

void require_same_shape(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw Error(ErrorKind::ValidationError, "matrix shape mismatch");
}

}  // namespace

Matrix operator+(const Matrix& x, const Matrix& y) {
  require_same_shape(x, y);
  Matrix r(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) r(i, j) = x(i, j) + y(i, j);
  return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  require_same_shape(x, y);
  Matrix r(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) r(i, j) = x(i, j) - y(i, j);
  return r;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols() != y.rows()) throw Error(ErrorKind::ValidationError, "matrix product shape mismatch");
  Matrix r(x.rows(), y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) {
      if (x(i, k) == 0) continue;
      for (int j = 0; j < y.cols(); ++j) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

Matrix operator*(const Scalar& c, const Matrix& x) {
  Matrix r = x;
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) r(i, j) *= c;
  return r;
}

Vec operator*(const Matrix& m, const Vec& v) {
  if (m.cols() != static_cast<int>(v.size())) throw Error(ErrorKind::ValidationError, "matrix-vector shape mismatch");
  Vec r(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (v[j] != 0) r[i] += m(i, j) * v[j];
  return r;
}

Vec vec_add(const Vec& x, const Vec& y) {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y.at(i);
  return r;
}

Vec vec_sub(const Vec& x, const Vec& y) {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y.at(i);
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& x) {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
  return r;
}

Scalar dot(const Vec& x, const Vec& y) {
  Scalar s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y.at(i);
  return s;
}

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

Vec unit_vector(int n, int i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, {}};
  Matrix& a = res.reduced;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    const Scalar inv = 1 / a(r, c);
    for (int j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Scalar factor = a(i, c);
      for (int j = c; j < a.cols(); ++j) a(i, j) -= factor * a(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  return res;
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<Vec> kernel(const Matrix& m) {
  const RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : rr.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (size_t r = 0; r < rr.pivots.size(); ++r) v[rr.pivots[r]] = -rr.reduced(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<AffineSolution> solve_affine(const Matrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw Error(ErrorKind::ValidationError, "right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const RrefResult rr = rref(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
  AffineSolution sol;
  sol.particular.assign(m.cols(), Scalar(0));
  for (size_t r = 0; r < rr.pivots.size(); ++r) sol.particular[rr.pivots[r]] = rr.reduced(static_cast<int>(r), m.cols());
  sol.directions = kernel(m);
  return sol;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  auto sol = solve_affine(m, b);
  if (!sol) return std::nullopt;
  return sol->particular;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) return std::nullopt;
  const int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RrefResult rr = rref(aug);
  if (static_cast<int>(rr.pivots.size()) < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
  return rr.reduced.block(0, n, n, n);
}

Scalar determinant(const Matrix& m) {
  if (!m.square()) throw Error(ErrorKind::ValidationError, "determinant of a non-square matrix");
  Matrix a = m;
  const int n = a.rows();
  Scalar det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Scalar factor = a(i, c) / a(c, c);
      for (int j = c; j < n; ++j) a(i, j) -= factor * a(c, j);
    }
  }
  return det;
}

Matrix kron(const Matrix& x, const Matrix& y) {
  Matrix r(x.rows() * y.rows(), x.cols() * y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) {
      if (x(i, j) == 0) continue;
      for (int k = 0; k < y.rows(); ++k)
        for (int l = 0; l < y.cols(); ++l) r(i * y.rows() + k, j * y.cols() + l) = x(i, j) * y(k, l);
    }
  return r;
}

Matrix power(const Matrix& m, int k) {
  Matrix r = Matrix::identity(m.rows());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

// Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
std::vector<Scalar> characteristic_polynomial(const Matrix& a) {
  const int n = a.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  for (int k = 1; k <= n; ++k) {
    mk = a * mk;
    for (int i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    const Matrix am = a * mk;
    Scalar tr = 0;
    for (int i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / k;
  }
  return c;
}

namespace {

// Divisors of |x| for x != 0; throws when x cannot be factored at desk scale.
std::vector<mpz_class> divisors(mpz_class x) {
  x = abs(x);
  std::map<mpz_class, int> factors;
  for (mpz_class d = 2; d * d <= x; ++d) {
    if (d > 2000000) break;
    while (x % d == 0) {
      ++factors[d];
      x /= d;
    }
  }
  if (x > 1) {
    if (x > mpz_class(2000000) * 2000000 && mpz_probab_prime_p(x.get_mpz_t(), 30) == 0)
      throw Error(ErrorKind::ValidationError, "characteristic polynomial coefficient too large to factor");
    ++factors[x];
  }
  std::vector<mpz_class> out{1};
  for (const auto& [prime, mult] : factors) {
    const size_t base = out.size();
    mpz_class pw = 1;
    for (int e = 1; e <= mult; ++e) {
      pw *= prime;
      for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
    }
  }
  return out;
}

Scalar evaluate(const std::vector<Scalar>& poly, const Scalar& x) {
  Scalar acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divide by (x - r), assuming r is a root.
std::vector<Scalar> deflate(const std::vector<Scalar>& poly, const Scalar& r) {
  const int d = static_cast<int>(poly.size()) - 1;
  std::vector<Scalar> q(d);
  Scalar carry = 0;
  for (int i = d; i >= 1; --i) {
    carry = poly[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

}  // namespace

std::vector<RationalRoot> rational_roots(std::vector<Scalar> poly, int* unsplit_degree) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  std::vector<RationalRoot> roots;
  auto add_root = [&roots](const Scalar& r) {
    for (auto& existing : roots)
      if (existing.value == r) {
        ++existing.multiplicity;
        return;
      }
    roots.push_back({r, 1});
  };
  while (poly.size() > 1 && poly[0] == 0) {
    add_root(0);
    poly.erase(poly.begin());
  }
  while (poly.size() > 1) {
    // Clear denominators to get integer coefficients.
    mpz_class lcm = 1;
    for (const auto& c : poly) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    const mpz_class a0 = Scalar(poly.front() * lcm).get_num();
    const mpz_class an = Scalar(poly.back() * lcm).get_num();
    std::optional<Scalar> found;
    for (const auto& num : divisors(a0)) {
      for (const auto& den : divisors(an)) {
        for (int sign : {1, -1}) {
          Scalar cand(num * sign, den);
          cand.canonicalize();
          if (evaluate(poly, cand) == 0) {
            found = cand;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
    add_root(*found);
    poly = deflate(poly, *found);
  }
  if (unsplit_degree) *unsplit_degree = static_cast<int>(poly.size()) - 1;
  std::sort(roots.begin(), roots.end(), [](const RationalRoot& x, const RationalRoot& y) { return x.value < y.value; });
  return roots;
}

std::string format_matrix(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
  }
  os << "]";
  return os.str();
}

}  // namespace phinlab
