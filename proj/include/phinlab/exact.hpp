#pragma once

// Exact scalars: rationals with p-adic valuation, dual numbers E[Z]/(Z^2) and
// the ring K0 (x) E, which splits as E^f along the embeddings of K0.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace phinlab {

using Scalar = mpq_class;

/// Parses "num/den", "num" or a decimal-free integer string. Throws
/// Error(ParseError) on anything else, including a zero denominator.
Scalar parse_scalar(const std::string& text);

/// Canonical "num/den" form; integers keep the "/1".
std::string format_scalar(const Scalar& x);

/// v_p(x); std::nullopt stands for +infinity (x == 0).
std::optional<long> p_valuation(const Scalar& x, long p);

bool is_prime(long p);

struct Embedding {
  std::string label;  // "tau_k"
  int restriction;    // index of the K0-embedding, k mod f
};

/// The local field K is only ever seen through (p, e, f) and formal labels of
/// its ef embeddings into E.
class FieldContext {
 public:
  FieldContext() = default;
  static FieldContext make(long p, int e, int f);

  long p() const { return p_; }
  int e() const { return e_; }
  int f() const { return f_; }
  int degree() const { return e_ * f_; }
  const std::vector<Embedding>& embeddings() const { return embeddings_; }
  int restriction(int tau) const { return embeddings_.at(tau).restriction; }

  /// v_p(pi_K) = 1/e.
  Scalar uniformizer_valuation() const { return Scalar(1, e_); }

  bool operator==(const FieldContext& other) const {
    return p_ == other.p_ && e_ == other.e_ && f_ == other.f_;
  }

 private:
  long p_ = 2;
  int e_ = 1;
  int f_ = 1;
  std::vector<Embedding> embeddings_;
};

/// a + bZ with Z^2 = 0.
struct DualScalar {
  Scalar a;
  Scalar b;

  DualScalar() = default;
  DualScalar(Scalar a_, Scalar b_) : a(std::move(a_)), b(std::move(b_)) {}

  friend DualScalar operator+(const DualScalar& x, const DualScalar& y) { return {x.a + y.a, x.b + y.b}; }
  friend DualScalar operator-(const DualScalar& x, const DualScalar& y) { return {x.a - y.a, x.b - y.b}; }
  friend DualScalar operator*(const DualScalar& x, const DualScalar& y) {
    return {x.a * y.a, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const DualScalar& x, const DualScalar& y) { return x.a == y.a && x.b == y.b; }
};

/// Throws Error(NotAUnit) when the constant term vanishes.
DualScalar dual_invert(const DualScalar& x);

/// An element of K0 (x) E stored by its f idempotent components.
class SemilinearScalar {
 public:
  SemilinearScalar() = default;
  explicit SemilinearScalar(std::vector<Scalar> components) : c_(std::move(components)) {}
  static SemilinearScalar constant(int f, const Scalar& value) {
    return SemilinearScalar(std::vector<Scalar>(f, value));
  }

  int f() const { return static_cast<int>(c_.size()); }
  const Scalar& operator[](int j) const { return c_.at(j); }
  Scalar& operator[](int j) { return c_.at(j); }
  const std::vector<Scalar>& components() const { return c_; }

  bool is_zero() const;
  bool is_unit() const;

  friend SemilinearScalar operator+(const SemilinearScalar& x, const SemilinearScalar& y);
  friend SemilinearScalar operator-(const SemilinearScalar& x, const SemilinearScalar& y);
  friend SemilinearScalar operator*(const SemilinearScalar& x, const SemilinearScalar& y);
  friend bool operator==(const SemilinearScalar& x, const SemilinearScalar& y) { return x.c_ == y.c_; }

 private:
  std::vector<Scalar> c_;
};

/// sigma: component j+1 moves to slot j. Order f, ring automorphism.
SemilinearScalar frobenius_shift(const SemilinearScalar& x);

}  // namespace phinlab
