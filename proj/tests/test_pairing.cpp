#include <gtest/gtest.h>

#include "phinlab/pairing.hpp"

using namespace phinlab;

TEST(Cup, Examples) {
  EXPECT_EQ(cup_product({1, {0, 0}}, {1, {0, 0}}), 1);
  EXPECT_EQ(cup_product({1, {0, 0}}, {0, {3, Scalar(1, 2)}}), 0);
  EXPECT_EQ(cup_product({0, {0, 1, 0}}, {0, {0, Scalar(7, 3), 0}}), Scalar(-7, 3));
}

TEST(Cup, DeRham) {
  EXPECT_TRUE(is_de_rham_cocycle({5, {0, 0}}));
  EXPECT_FALSE(is_de_rham_cocycle({0, {0, 1}}));
  EXPECT_TRUE(is_de_rham_cocycle({0, {0, 0}}));
}

TEST(Cup, GramMatrixAndKernel) {
  for (int deg = 1; deg <= 4; ++deg) {
    Vec diag(deg + 1, -1);
    diag[0] = 1;
    EXPECT_EQ(pairing_matrix(deg), Matrix::diagonal(diag));
    EXPECT_TRUE(pairing_kernel(deg).empty());
  }
}

TEST(AuxRelation, Examples) {
  const GammaCoefficients g{Scalar(1, 2), {1, 2}};
  const std::vector<Scalar> L{3, -1};
  EXPECT_TRUE(aux_relation_check(g, g, L));
  EXPECT_TRUE(aux_relation_check({1, {5, 5}}, {1, {0, 9}}, {0, 0}));
  const std::vector<Scalar> c{Scalar(2, 5), 4};
  GammaCoefficients g2{g.gamma0 + L[0] * c[0] + L[1] * c[1], {g.gamma_tau[0] + c[0], g.gamma_tau[1] + c[1]}};
  EXPECT_TRUE(aux_relation_check(g2, g, L));
  g2.gamma0 += 1;
  EXPECT_FALSE(aux_relation_check(g2, g, L));
}
