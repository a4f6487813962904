#pragma once

// Characters of K^x over E[Z]/(Z^2), recorded by their values at pi_K and p,
// a weight vector, and the first-order parts epsilon.

#include <string>
#include <vector>

#include "phinlab/exact.hpp"
#include "phinlab/matrix.hpp"

namespace phinlab {

struct InfinitesimalCharacter {
  Scalar base_at_pi = 1;
  Scalar base_at_p = 1;
  std::vector<Scalar> base_weights;
  Scalar eps_at_pi = 0;
  Scalar eps_at_p = 0;
  std::vector<Scalar> eps_weights;
  std::string smooth_tag;

  bool operator==(const InfinitesimalCharacter& o) const {
    return base_at_pi == o.base_at_pi && base_at_p == o.base_at_p && base_weights == o.base_weights &&
           eps_at_pi == o.eps_at_pi && eps_at_p == o.eps_at_p && eps_weights == o.eps_weights && smooth_tag == o.smooth_tag;
  }
};

using TriangulationFamily = std::vector<InfinitesimalCharacter>;

struct GammaCoefficients {
  Scalar gamma0;
  std::vector<Scalar> gamma_tau;
};

/// Unit base values and one weight per embedding; with `consistency` also
/// eps(p) = e eps(pi_K) and delta(p) = delta(pi_K)^e. Throws ValidationError.
void validate_character(const InfinitesimalCharacter& d, const FieldContext& ctx, bool consistency = false);

enum class EvalPoint { Uniformizer, P };

/// delta_z(x) (1 + Z eps(x)).
DualScalar character_as_dual(const InfinitesimalCharacter& d, EvalPoint x);

/// The logarithmic derivative at p, read off the dual value.
Scalar dlog_at_p(const InfinitesimalCharacter& d);

/// (eps_tau)_tau.
std::vector<Scalar> weight_differential(const InfinitesimalCharacter& d);

/// w(delta) over the dual numbers: base weight + Z eps weight, per tau.
std::vector<DualScalar> dual_weight_vector(const InfinitesimalCharacter& d);

/// (1/ef)(eps_t(p) - eps_s(p)) + sum_tau L_tau (eps_t,tau - eps_s,tau), s and t
/// 1-based. Throws IndexOutOfRange.
Scalar cgs_residual(const TriangulationFamily& fam, int s, int t, const std::vector<Scalar>& L, const FieldContext& ctx);

/// gamma0 = -eps(p)/(ef), gamma_tau = eps_tau.
GammaCoefficients gamma_from_epsilon(const InfinitesimalCharacter& d, const FieldContext& ctx);

struct DerivationReport {
  Scalar residual;
  bool residual_zero = false;
  bool aux_holds = false;
  bool equivalent() const { return residual_zero == aux_holds; }
};

/// Compares the auxiliary gamma relation for (delta_t, delta_s) against the
/// vanishing of the residual.
DerivationReport derive_theorem_from_aux(const InfinitesimalCharacter& ds, const InfinitesimalCharacter& dt,
                                         const std::vector<Scalar>& L, const FieldContext& ctx);

/// A + Z B.
struct DualMatrix {
  Matrix constant;
  Matrix z;
};
DualMatrix dual_multiply(const DualMatrix& x, const DualMatrix& y);

struct DeformationCocycle {
  Matrix U_phi;
  Matrix U_gamma;
};

/// U = (Z-part) A^{-1} for each input, so that A~ = (I + Z U) A. Throws
/// SingularConstantTerm.
DeformationCocycle deformation_matrix_cocycle(const DualMatrix& phi, const DualMatrix& gamma);

}  // namespace phinlab
