#include "phinlab/pairing.hpp"

#include "phinlab/error.hpp"

namespace phinlab {

Scalar cup_product(const UnramifiedClass& x, const KummerClass& y) {
  if (x.a.size() != y.b.size()) throw Error(ErrorKind::ValidationError, "classes have different numbers of embeddings");
  Scalar v = x.a0 * y.b0;
  for (size_t k = 0; k < x.a.size(); ++k) v -= x.a[k] * y.b[k];
  return v;
}

bool is_de_rham_cocycle(const UnramifiedClass& x) { return vec_is_zero(x.a); }

bool aux_relation_check(const GammaCoefficients& g2, const GammaCoefficients& g3, const std::vector<Scalar>& L) {
  if (g2.gamma_tau.size() != L.size() || g3.gamma_tau.size() != L.size())
    throw Error(ErrorKind::ValidationError, "gamma vectors and L must have one entry per embedding");
  Scalar rhs = 0;
  for (size_t k = 0; k < L.size(); ++k) rhs += L[k] * (g2.gamma_tau[k] - g3.gamma_tau[k]);
  return g2.gamma0 - g3.gamma0 == rhs;
}

Matrix pairing_matrix(int degree) {
  Matrix g(degree + 1, degree + 1);
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; j <= degree; ++j) {
      UnramifiedClass x{i == 0 ? Scalar(1) : Scalar(0), Vec(degree)};
      KummerClass y{j == 0 ? Scalar(1) : Scalar(0), Vec(degree)};
      if (i > 0) x.a[i - 1] = 1;
      if (j > 0) y.b[j - 1] = 1;
      g(i, j) = cup_product(x, y);
    }
  return g;
}

std::vector<Vec> pairing_kernel(int degree) { return kernel(pairing_matrix(degree).transpose()); }

}  // namespace phinlab
