#include <gtest/gtest.h>

#include "phinlab/family.hpp"
#include "phinlab/pairing.hpp"
#include "test_helpers.hpp"

using namespace phinlab;

namespace {

FieldContext C(long p, int e, int f) { return FieldContext::make(p, e, f); }

InfinitesimalCharacter character(int deg, Scalar eps_p, std::vector<Scalar> eps_w) {
  InfinitesimalCharacter d;
  d.base_at_pi = 2;
  d.base_at_p = 4;
  d.base_weights = std::vector<Scalar>(deg, 1);
  d.eps_at_pi = eps_p;
  d.eps_at_p = eps_p;
  d.eps_weights = std::move(eps_w);
  return d;
}

}  // namespace

TEST(Character, AsDual) {
  InfinitesimalCharacter d = character(1, 0, {0});
  EXPECT_EQ(character_as_dual(d, EvalPoint::Uniformizer), DualScalar(2, 0));
  d.base_at_p = 1;
  d.eps_at_p = 3;
  EXPECT_EQ(character_as_dual(d, EvalPoint::P), DualScalar(1, 3));
}

TEST(Character, Dlog) {
  EXPECT_EQ(dlog_at_p(character(1, 0, {0})), 0);
  EXPECT_EQ(dlog_at_p(character(1, 5, {0})), 5);
  const auto ctx = C(3, 3, 1);
  InfinitesimalCharacter d = character(3, 0, {0, 0, 0});
  d.base_at_pi = 2;
  d.base_at_p = 8;
  d.eps_at_pi = 2;
  d.eps_at_p = 6;
  validate_character(d, ctx, true);
  EXPECT_EQ(dlog_at_p(d), 2 * ctx.e());
}

TEST(Character, WeightDifferential) {
  EXPECT_EQ(weight_differential(character(2, 0, {0, 0})), (std::vector<Scalar>{0, 0}));
  EXPECT_EQ(weight_differential(character(3, 0, {0, 1, 0})), (std::vector<Scalar>{0, 1, 0}));
  const auto d = character(2, 0, {Scalar(1, 3), -4});
  const auto w = dual_weight_vector(d);
  for (int k = 0; k < 2; ++k) EXPECT_EQ(w[k].b, weight_differential(d)[k]);
}

TEST(Character, Validation) {
  const auto ctx = C(2, 2, 1);
  InfinitesimalCharacter d = character(2, 1, {0, 0});
  EXPECT_ERROR_KIND(validate_character(d, ctx, true), ErrorKind::ValidationError);  // eps(p) != 2 eps(pi)
  validate_character(d, ctx, false);
  d.base_weights.pop_back();
  EXPECT_ERROR_KIND(validate_character(d, ctx, false), ErrorKind::ValidationError);
  d = character(2, 0, {0, 0});
  d.base_at_pi = 0;
  EXPECT_ERROR_KIND(validate_character(d, ctx, false), ErrorKind::ValidationError);
}

TEST(Residual, Examples) {
  const auto ctx = C(5, 2, 2);
  const std::vector<Scalar> L{1, Scalar(1, 2), -3, 0};
  const auto ds = character(4, Scalar(2, 3), {1, 2, 3, 4});
  EXPECT_EQ(cgs_residual({ds, ds}, 1, 2, L, ctx), 0);
  auto dt = character(4, 0, {0, 5, Scalar(-1, 2), 7});
  Scalar acc = 0;
  for (int k = 0; k < 4; ++k) acc += L[k] * (dt.eps_weights[k] - ds.eps_weights[k]);
  dt.eps_at_p = ds.eps_at_p - ctx.degree() * acc;
  EXPECT_EQ(cgs_residual({ds, dt}, 1, 2, L, ctx), 0);
  dt.eps_at_p += 1;
  EXPECT_EQ(cgs_residual({ds, dt}, 1, 2, L, ctx), Scalar(1, 4));
  EXPECT_ERROR_KIND(cgs_residual({ds, dt}, 1, 3, L, ctx), ErrorKind::IndexOutOfRange);
}

TEST(Gamma, Examples) {
  EXPECT_EQ(gamma_from_epsilon(character(1, 0, {0}), C(3, 1, 1)).gamma0, 0);
  EXPECT_EQ(gamma_from_epsilon(character(1, 2, {0}), C(3, 1, 1)).gamma0, -2);
  const auto g = gamma_from_epsilon(character(6, 12, {1, 2, 3, 4, 5, 6}), C(3, 2, 3));
  EXPECT_EQ(g.gamma0, -2);
  EXPECT_EQ(g.gamma_tau, (std::vector<Scalar>{1, 2, 3, 4, 5, 6}));
}

TEST(Derivation, Examples) {
  const auto ctx = C(2, 1, 2);
  const std::vector<Scalar> L{Scalar(3, 2), -1};
  const auto ds = character(2, 1, {2, 0});
  auto dt = character(2, 0, {-1, 4});
  Scalar acc = 0;
  for (int k = 0; k < 2; ++k) acc += L[k] * (dt.eps_weights[k] - ds.eps_weights[k]);
  dt.eps_at_p = ds.eps_at_p - 2 * acc;
  auto rep = derive_theorem_from_aux(ds, dt, L, ctx);
  EXPECT_TRUE(rep.residual_zero && rep.aux_holds);
  dt.eps_at_p += 3;
  rep = derive_theorem_from_aux(ds, dt, L, ctx);
  EXPECT_FALSE(rep.residual_zero || rep.aux_holds);
  rep = derive_theorem_from_aux(ds, ds, L, ctx);
  EXPECT_TRUE(rep.residual_zero && rep.aux_holds);
}

TEST(Cocycle, Examples) {
  const Matrix a = Matrix::from_rows({{2, 1}, {0, 3}}, 2);
  const Matrix b = Matrix::from_rows({{1, 0}, {1, 1}}, 2);
  auto c = deformation_matrix_cocycle({a, Matrix(2, 2)}, {b, Matrix(2, 2)});
  EXPECT_TRUE(c.U_phi.is_zero());
  EXPECT_TRUE(c.U_gamma.is_zero());
  Matrix e12(2, 2);
  e12(0, 1) = 1;
  // (I + Z E12) A has Z-part E12 A.
  c = deformation_matrix_cocycle({a, e12 * a}, {b, e12 * b});
  EXPECT_EQ(c.U_phi, e12);
  EXPECT_EQ(c.U_gamma, e12);
  const DualMatrix x{a, Matrix::from_rows({{1, -2}, {Scalar(1, 3), 5}}, 2)};
  const auto u = deformation_matrix_cocycle(x, {b, Matrix(2, 2)}).U_phi;
  const DualMatrix prod = dual_multiply({Matrix::identity(2), u}, {a, Matrix(2, 2)});
  EXPECT_EQ(prod.constant, a);
  EXPECT_EQ(prod.z, x.z);
  EXPECT_ERROR_KIND(deformation_matrix_cocycle({Matrix(2, 2), Matrix(2, 2)}, {b, b}), ErrorKind::SingularConstantTerm);
}
