#include <gtest/gtest.h>

#include "phinlab/fixtures.hpp"
#include "phinlab/module.hpp"
#include "test_helpers.hpp"

using namespace phinlab;

namespace {

FieldContext C(long p, int e, int f) { return FieldContext::make(p, e, f); }

FilteredPhiNModule trivial(int n, const FieldContext& ctx) {
  FilteredPhiNModule d;
  d.ctx = ctx;
  d.n = n;
  for (int c = 0; c < ctx.f(); ++c) {
    d.phi.push_back(Matrix::identity(n));
    d.N.push_back(Matrix(n, n));
  }
  for (int k = 0; k < ctx.degree(); ++k) d.filtration.push_back({{0, Subspace::full(n)}});
  return d;
}

}  // namespace

TEST(Validate, TrivialModulePasses) { EXPECT_TRUE(validate(trivial(3, C(3, 2, 2))).ok()); }

TEST(Validate, PhiNRelationViolation) {
  FilteredPhiNModule d = trivial(2, C(3, 1, 1));
  d.N[0](0, 1) = 1;  // N phi = phi N, but the relation needs N phi = p phi N
  const auto rep = validate(d);
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.violations.front(), "phi-N relation");
  EXPECT_ERROR_KIND(require_valid(d), ErrorKind::ValidationError);
}

TEST(Validate, NonNestedFiltration) {
  FilteredPhiNModule d = trivial(2, C(2, 1, 1));
  d.filtration[0] = {{0, Subspace::span(2, {{1, 0}})}, {1, Subspace::span(2, {{0, 1}})}};
  const auto rep = validate(d);
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.violations.front(), "filtration flag");
}

TEST(Validate, SingularPhi) {
  FilteredPhiNModule d = trivial(2, C(2, 1, 1));
  d.phi[0](1, 1) = 0;
  EXPECT_FALSE(validate(d).ok());
}

TEST(Rank1, UnitObject) {
  const auto u = unit_object(C(5, 1, 3));
  for (int c = 0; c < 3; ++c) EXPECT_EQ(u.phi_f(c), Matrix::identity(1));
  EXPECT_TRUE(is_weakly_admissible(u).admissible);
}

TEST(Rank1, NewtonAndHodge) {
  const auto ctx = C(3, 1, 1);
  const auto d = construct_rank1(3, {0}, ctx);
  EXPECT_EQ(newton_number(d), 1);
  EXPECT_EQ(hodge_number(d), 0);
  EXPECT_EQ(newton_number(construct_rank1(1, {0}, ctx)), 0);
  EXPECT_EQ(hodge_number(construct_rank1(1, {4}, ctx)), 4);
}

TEST(Rank1, PhiSquaredActsByA) {
  const auto d = construct_rank1(4, {0, 0}, C(2, 1, 2));
  EXPECT_EQ(d.phi_f(0), Matrix::diagonal({4}));
  EXPECT_EQ(d.phi_f(1), Matrix::diagonal({4}));
}

TEST(Rank1, ZeroFrobenius) { EXPECT_ERROR_KIND(construct_rank1(0, {0}, C(2, 1, 1)), ErrorKind::ZeroFrobenius); }

TEST(Admissible, Rank1Examples) {
  const auto ctx = C(3, 1, 1);
  EXPECT_TRUE(is_weakly_admissible(construct_rank1(3, {1}, ctx)).admissible);
  const auto bad = is_weakly_admissible(construct_rank1(3, {0}, ctx));
  EXPECT_FALSE(bad.admissible);
  ASSERT_TRUE(bad.witness);
  EXPECT_TRUE((*bad.witness)[0].is_full());
}

TEST(Admissible, AuxiliaryModuleAtF1) {
  // t_N = -1 and the filtration Fil^{-1} = D, Fil^0 of dimension 2 gives t_H = -1.
  const auto d = auxiliary_module({Scalar(2, 3)}, C(5, 1, 1));
  EXPECT_EQ(newton_number(d), -1);
  EXPECT_EQ(hodge_number(d), -1);
}

TEST(Admissible, DegenerateEigenvalues) {
  EXPECT_ERROR_KIND(is_weakly_admissible(trivial(2, C(2, 1, 1))), ErrorKind::EigenvalueDegeneracy);
}

TEST(Tensor, UnitIsNeutral) {
  const auto ctx = C(3, 1, 2);
  const auto d = auxiliary_module({1, Scalar(-1, 2)}, ctx);
  EXPECT_EQ(tensor(d, unit_object(ctx)), d);
  EXPECT_EQ(tensor(unit_object(ctx), d), d);
}

TEST(Tensor, Rank1Product) {
  const auto ctx = C(2, 2, 1);
  EXPECT_EQ(tensor(construct_rank1(3, {1, 0}, ctx), construct_rank1(Scalar(1, 2), {2, -1}, ctx)),
            construct_rank1(Scalar(3, 2), {3, -1}, ctx));
}

TEST(Tensor, NewtonAdditivity) {
  const auto ctx = C(3, 1, 1);
  const auto d1 = auxiliary_module({1}, ctx);
  const auto d2 = construct_rank1(9, {2}, ctx);
  const auto t = tensor(d1, d2);
  EXPECT_TRUE(validate(t).ok());
  EXPECT_EQ(newton_number(t), d2.n * newton_number(d1) + d1.n * newton_number(d2));
}

TEST(Tensor, ContextMismatch) {
  EXPECT_ERROR_KIND(tensor(unit_object(C(2, 1, 1)), unit_object(C(3, 1, 1))), ErrorKind::ContextMismatch);
}

TEST(Dual, Involution) {
  const auto d = auxiliary_module({Scalar(3, 7), -2}, C(3, 2, 1));
  EXPECT_EQ(dual(dual(d)), d);
  EXPECT_TRUE(validate(dual(d)).ok());
  EXPECT_EQ(newton_number(dual(d)), -newton_number(d));
  EXPECT_EQ(hodge_number(dual(d)), -hodge_number(d));
}

TEST(Dual, Rank1) {
  const auto ctx = C(5, 1, 2);
  EXPECT_EQ(dual(construct_rank1(Scalar(5, 2), {3, -1}, ctx)), construct_rank1(Scalar(2, 5), {-3, 1}, ctx));
}

TEST(Dual, KeepsNZero) { EXPECT_TRUE(dual(trivial(3, C(2, 1, 1))).N[0].is_zero()); }

TEST(Sub, FullAndInducedFiltration) {
  const auto ctx = C(3, 1, 1);
  const Scalar L = Scalar(5, 4);
  const auto d = auxiliary_module({L}, ctx);
  EXPECT_EQ(sub(d, d.full_submodule()), d);
  const auto s = sub(d, std::vector<Matrix>{Matrix::from_rows({{1, 0, 0}, {0, 1, 0}}, 3)});
  EXPECT_EQ(s.n, 2);
  EXPECT_EQ(fil_at(s.filtration[0], 0, 2), Subspace::span(2, {{-L, 1}}));
  EXPECT_TRUE(fil_at(s.filtration[0], 1, 2).is_zero());
}

TEST(Sub, NotStable) {
  const auto d = auxiliary_module({1}, C(3, 1, 1));
  EXPECT_ERROR_KIND(sub(d, std::vector<Matrix>{Matrix::from_rows({{0, 1, 0}}, 3)}), ErrorKind::NotStable);
}

TEST(Sub, NotFree) {
  const auto d = trivial(2, C(3, 1, 2));
  EXPECT_ERROR_KIND(sub(d, Submodule{Subspace::span(2, {{1, 0}}), Subspace::zero(2)}), ErrorKind::NotFree);
}

TEST(Quotient, Examples) {
  const auto ctx = C(2, 1, 1);
  const auto d = auxiliary_module({3}, ctx);
  EXPECT_EQ(quotient(d, d.zero_submodule()), d);
  EXPECT_EQ(quotient(d, d.full_submodule()).n, 0);
  const auto q = quotient(d, Submodule{Subspace::span(3, {{1, 0, 0}})});
  EXPECT_EQ(q.n, 2);
  EXPECT_TRUE(q.N[0].is_zero());
  EXPECT_EQ(q.phi_f(0), Matrix::identity(2));
}

TEST(Auxiliary, SpecExamples) {
  for (const auto& ctx : {C(3, 1, 1), C(2, 2, 1), C(5, 1, 2), C(3, 2, 2)}) {
    const auto d = auxiliary_module(std::vector<Scalar>(ctx.degree(), 0), ctx);
    EXPECT_TRUE(validate(d).ok());
    for (int k = 0; k < ctx.degree(); ++k)
      EXPECT_EQ(fil_at(d.filtration[k], 0, 3), Subspace::span(3, {{0, 1, 0}, {0, 0, 1}}));
    Scalar pf = 1;
    for (int c = 0; c < ctx.f(); ++c) pf /= ctx.p();
    EXPECT_EQ(d.phi_f(0), Matrix::diagonal({pf, 1, 1}));
    EXPECT_EQ(newton_number(d), -ctx.f());
    EXPECT_TRUE((d.N[0] * d.N[0]).is_zero());
  }
}

TEST(Hodge, Rank2Jumps) {
  const auto ctx = C(3, 1, 2);
  FilteredPhiNModule d = trivial(2, ctx);
  for (auto& fil : d.filtration) fil = {{0, Subspace::full(2)}, {4, Subspace::span(2, {{1, 1}})}};
  EXPECT_EQ(hodge_number(d), 4);
  EXPECT_EQ(hodge_tate_weights(d)[1], (std::vector<int>{0, 4}));
}

TEST(ChangeBasis, PreservesInvariants) {
  const auto d = auxiliary_module({Scalar(1, 3)}, C(3, 1, 1));
  const Matrix p = Matrix::from_rows({{1, 1, 0}, {0, 1, 2}, {1, 0, 1}}, 3);
  const auto e = change_basis(d, {p});
  EXPECT_TRUE(validate(e).ok());
  EXPECT_EQ(newton_number(e), newton_number(d));
  EXPECT_EQ(hodge_number(e), hodge_number(d));
  EXPECT_EQ(change_basis(e, {*inverse(p)}), d);
}
