#include "phinlab/exact.hpp"

#include <cctype>

#include "phinlab/error.hpp"

namespace phinlab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::ZeroFrobenius: return "ZeroFrobenius";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::NotFree: return "NotFree";
    case ErrorKind::EigenvalueDegeneracy: return "EigenvalueDegeneracy";
    case ErrorKind::EigenvaluesNotRational: return "EigenvaluesNotRational";
    case ErrorKind::NotAFlag: return "NotAFlag";
    case ErrorKind::WrongGradedRank: return "WrongGradedRank";
    case ErrorKind::NotMarked: return "NotMarked";
    case ErrorKind::NotStronglyMarked: return "NotStronglyMarked";
    case ErrorKind::NoPerfectDecomposition: return "NoPerfectDecomposition";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SingularConstantTerm: return "SingularConstantTerm";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(const std::string& s) {
  size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den))
    throw Error(ErrorKind::ParseError, "not an exact rational: '" + text + "'");
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den[0] == '+' ? den.substr(1) : den, 10);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
  Scalar x(n, d);
  x.canonicalize();
  return x;
}

std::string format_scalar(const Scalar& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::optional<long> p_valuation(const Scalar& x, long p) {
  if (x == 0) return std::nullopt;
  mpz_class prime(p), rest;
  long v = static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_num().get_mpz_t(), prime.get_mpz_t()));
  v -= static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_den().get_mpz_t(), prime.get_mpz_t()));
  return v;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FieldContext FieldContext::make(long p, int e, int f) {
  if (!is_prime(p)) throw Error(ErrorKind::ValidationError, "p = " + std::to_string(p) + " is not prime");
  if (e < 1 || f < 1) throw Error(ErrorKind::ValidationError, "e and f must be positive");
  FieldContext ctx;
  ctx.p_ = p;
  ctx.e_ = e;
  ctx.f_ = f;
  for (int k = 0; k < e * f; ++k) ctx.embeddings_.push_back({"tau_" + std::to_string(k), k % f});
  return ctx;
}

DualScalar dual_invert(const DualScalar& x) {
  if (x.a == 0) throw Error(ErrorKind::NotAUnit, "dual number with zero constant term");
  Scalar inv = 1 / x.a;
  return {inv, -x.b * inv * inv};
}

bool SemilinearScalar::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

bool SemilinearScalar::is_unit() const {
  for (const auto& v : c_)
    if (v == 0) return false;
  return true;
}

SemilinearScalar operator+(const SemilinearScalar& x, const SemilinearScalar& y) {
  std::vector<Scalar> out(x.c_.size());
  for (size_t j = 0; j < out.size(); ++j) out[j] = x.c_[j] + y.c_.at(j);
  return SemilinearScalar(std::move(out));
}

SemilinearScalar operator-(const SemilinearScalar& x, const SemilinearScalar& y) {
  std::vector<Scalar> out(x.c_.size());
  for (size_t j = 0; j < out.size(); ++j) out[j] = x.c_[j] - y.c_.at(j);
  return SemilinearScalar(std::move(out));
}

SemilinearScalar operator*(const SemilinearScalar& x, const SemilinearScalar& y) {
  std::vector<Scalar> out(x.c_.size());
  for (size_t j = 0; j < out.size(); ++j) out[j] = x.c_[j] * y.c_.at(j);
  return SemilinearScalar(std::move(out));
}

SemilinearScalar frobenius_shift(const SemilinearScalar& x) {
  const int f = x.f();
  std::vector<Scalar> out(f);
  for (int j = 0; j < f; ++j) out[j] = x[(j + 1) % f];
  return SemilinearScalar(std::move(out));
}

}  // namespace phinlab
