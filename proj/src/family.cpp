#include "phinlab/family.hpp"

#include "phinlab/error.hpp"
#include "phinlab/pairing.hpp"

namespace phinlab {

void validate_character(const InfinitesimalCharacter& d, const FieldContext& ctx, bool consistency) {
  if (d.base_at_pi == 0 || d.base_at_p == 0) throw Error(ErrorKind::ValidationError, "character values must be units");
  if (static_cast<int>(d.base_weights.size()) != ctx.degree() || static_cast<int>(d.eps_weights.size()) != ctx.degree())
    throw Error(ErrorKind::ValidationError, "weight vectors need one entry per embedding");
  if (!consistency) return;
  if (d.eps_at_p != ctx.e() * d.eps_at_pi) throw Error(ErrorKind::ValidationError, "eps(p) != e eps(pi_K)");
  Scalar pw = 1;
  for (int k = 0; k < ctx.e(); ++k) pw *= d.base_at_pi;
  if (d.base_at_p != pw) throw Error(ErrorKind::ValidationError, "delta(p) != delta(pi_K)^e");
}

DualScalar character_as_dual(const InfinitesimalCharacter& d, EvalPoint x) {
  const Scalar& base = x == EvalPoint::P ? d.base_at_p : d.base_at_pi;
  const Scalar& eps = x == EvalPoint::P ? d.eps_at_p : d.eps_at_pi;
  return DualScalar(base, 0) * DualScalar(1, eps);
}

Scalar dlog_at_p(const InfinitesimalCharacter& d) {
  const DualScalar v = character_as_dual(d, EvalPoint::P);
  return (v * dual_invert(DualScalar(v.a, 0))).b;
}

std::vector<Scalar> weight_differential(const InfinitesimalCharacter& d) { return d.eps_weights; }

std::vector<DualScalar> dual_weight_vector(const InfinitesimalCharacter& d) {
  std::vector<DualScalar> out;
  for (size_t k = 0; k < d.base_weights.size(); ++k) out.emplace_back(d.base_weights[k], d.eps_weights.at(k));
  return out;
}

Scalar cgs_residual(const TriangulationFamily& fam, int s, int t, const std::vector<Scalar>& L, const FieldContext& ctx) {
  const int n = static_cast<int>(fam.size());
  if (s < 1 || s > n || t < 1 || t > n) throw Error(ErrorKind::IndexOutOfRange, "s and t must lie in 1..n");
  if (static_cast<int>(L.size()) != ctx.degree()) throw Error(ErrorKind::ValidationError, "L needs one entry per embedding");
  const InfinitesimalCharacter& ds = fam[s - 1];
  const InfinitesimalCharacter& dt = fam[t - 1];
  Scalar r = (dt.eps_at_p - ds.eps_at_p) / ctx.degree();
  for (int k = 0; k < ctx.degree(); ++k) r += L[k] * (dt.eps_weights.at(k) - ds.eps_weights.at(k));
  return r;
}

GammaCoefficients gamma_from_epsilon(const InfinitesimalCharacter& d, const FieldContext& ctx) {
  return {-d.eps_at_p / ctx.degree(), d.eps_weights};
}

DerivationReport derive_theorem_from_aux(const InfinitesimalCharacter& ds, const InfinitesimalCharacter& dt,
                                         const std::vector<Scalar>& L, const FieldContext& ctx) {
  DerivationReport rep;
  rep.residual = cgs_residual({ds, dt}, 1, 2, L, ctx);
  rep.residual_zero = rep.residual == 0;
  rep.aux_holds = aux_relation_check(gamma_from_epsilon(dt, ctx), gamma_from_epsilon(ds, ctx), L);
  return rep;
}

DualMatrix dual_multiply(const DualMatrix& x, const DualMatrix& y) {
  return {x.constant * y.constant, x.constant * y.z + x.z * y.constant};
}

DeformationCocycle deformation_matrix_cocycle(const DualMatrix& phi, const DualMatrix& gamma) {
  auto extract = [](const DualMatrix& m, const char* name) {
    const auto inv = inverse(m.constant);
    if (!inv) throw Error(ErrorKind::SingularConstantTerm, std::string("constant term of ") + name + " is singular");
    return m.z * *inv;
  };
  return {extract(phi, "A_phi"), extract(gamma, "A_gamma")};
}

}  // namespace phinlab
