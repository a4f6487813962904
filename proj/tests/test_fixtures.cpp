#include <gtest/gtest.h>

#include "phinlab/fixtures.hpp"
#include "test_helpers.hpp"

using namespace phinlab;

namespace {
FieldContext C(long p, int e, int f) { return FieldContext::make(p, e, f); }
}  // namespace

TEST(TensorFixtures, PipelineMatchesClosedForm) {
  for (const auto& ctx : {C(3, 1, 1), C(2, 2, 1), C(5, 1, 2)}) {
    std::vector<Scalar> L;
    std::vector<int> a, b;
    for (int k = 0; k < ctx.degree(); ++k) {
      L.push_back(Scalar(2 * k - 1, 3));
      a.push_back(-k);
      b.push_back(k + 1);
    }
    for (int n : {2, 3, 4}) {
      const auto tf = tensor_fixtures(n, L, a, b, ctx);
      EXPECT_EQ(tf.witness.L, L);
      EXPECT_TRUE(validate(tf.big).ok());
      EXPECT_EQ(tf.block, tensor_block_closed_form(ctx, tf.k_s, tf.k_t, tf.witness)) << "n = " << n;
    }
  }
}

TEST(TensorFixtures, FrobeniusAndMonodromy) {
  const auto ctx = C(3, 1, 2);
  const auto tf = tensor_fixtures(3, {1, 2}, {0, 0}, {1, 1}, ctx);
  EXPECT_EQ(tf.big.phi_f(0), Matrix::diagonal({1, 9, Scalar(1, 9), 1}));
  for (int c = 0; c < ctx.f(); ++c) EXPECT_TRUE(vec_is_zero(tf.big.N[c].col(2)));  // N(e_n* (x) e_1) = 0
  // -N(e_1* (x) e_1) = N(e_n* (x) e_n).
  EXPECT_EQ(tf.block.N[0].col(0), vec_scale(-1, tf.block.N[0].col(2)));
}

TEST(TensorFixtures, FilDisplay) {
  const auto ctx = C(2, 1, 1);
  const Scalar L = Scalar(-5, 3);
  const auto tf = tensor_fixtures(3, {L}, {0}, {1}, ctx);
  const int level = tf.k_t[0] - tf.witness.k_t_prime[0];
  EXPECT_TRUE(fil_at(tf.block.filtration[0], level, 3).contains(Vec{0, L, 1}));
}

TEST(TensorFixtures, NeedsMarkedEnds) {
  const auto d = auxiliary_module({1}, C(3, 1, 1));
  EXPECT_ERROR_KIND(tensor_fixtures(d, auxiliary_refinement(d, {1, 2, 3})), ErrorKind::NoPerfectDecomposition);
}

TEST(TensorSource, Valid) {
  const auto ctx = C(3, 2, 1);
  for (int n : {2, 3, 4}) EXPECT_TRUE(validate(tensor_source_module(n, {1, 0}, {-1, 0}, {1, 3}, ctx)).ok());
  EXPECT_ERROR_KIND(tensor_source_module(3, {1, 0}, {1, 0}, {1, 3}, ctx), ErrorKind::ValidationError);
}

TEST(Auxiliary, LowestJump) {
  const auto ctx = C(3, 1, 1);
  const auto d = auxiliary_module({1}, ctx, -4);
  EXPECT_TRUE(fil_at(d.filtration[0], -4, 3).is_full());
  EXPECT_EQ(fil_at(d.filtration[0], -3, 3).dim(), 2);
  EXPECT_ERROR_KIND(auxiliary_module({1}, ctx, 0), ErrorKind::ValidationError);
}
