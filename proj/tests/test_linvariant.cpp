#include <gtest/gtest.h>

#include "phinlab/fixtures.hpp"
#include "phinlab/linvariant.hpp"
#include "test_helpers.hpp"

using namespace phinlab;

namespace {

FieldContext C(long p, int e, int f) { return FieldContext::make(p, e, f); }

// Hand solve for the auxiliary module, pair (1, 2). The decomposition needs
// N(e_t) = e_s. With e_t = f2 this forces e_s = N f2 = -f1, so the Fil^0 line
// f2 - L f1 = e_t + L e_s and the invariant is +L. The other flag has
// e_t = f3, e_s = N f3 = f1 and line f3 + L f1 = e_t + L e_s: again +L.
const std::vector<Scalar> kL{Scalar(1, 2), -2, Scalar(5, 7), 0};

}  // namespace

TEST(LInvariant, AuxiliaryFirstFlagIsPlusL) {
  const auto ctx = C(3, 2, 2);
  const auto d = auxiliary_module(kL, ctx);
  EXPECT_EQ(l_invariant(d, auxiliary_refinement(d, {1, 2, 3}), 1, 2), kL);
}

TEST(LInvariant, AuxiliarySecondFlagIsPlusL) {
  const auto ctx = C(3, 2, 2);
  const auto d = auxiliary_module(kL, ctx);
  EXPECT_EQ(l_invariant(d, auxiliary_refinement(d, {1, 3, 2}), 1, 2), kL);
}

TEST(LInvariant, Rank2Block) {
  // Fil^0 = E(e2 + L e1) with N e2 = e1.
  const auto ctx = C(5, 1, 2);
  const std::vector<Scalar> L{Scalar(-3, 4), 6};
  const auto d = tensor_source_module(2, L, {-1, -1}, {0, 0}, ctx);
  const auto r = refinement_from_basis(d, {{1, 0}, {0, 1}});
  EXPECT_EQ(l_invariant(d, r, 1, 2), L);
}

TEST(LInvariant, ScalingTheBasisKeepsL) {
  const auto ctx = C(3, 1, 1);
  const auto d = auxiliary_module({Scalar(2, 9)}, ctx);
  const auto e = change_basis(d, {Matrix::diagonal({-2, Scalar(1, 3), 5})});
  EXPECT_EQ(l_invariant(e, refinement_from_basis(e, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 1, 2),
            (std::vector<Scalar>{Scalar(2, 9)}));
}

TEST(Decompositions, AuxiliaryShape) {
  const auto ctx = C(2, 1, 1);
  const auto d = auxiliary_module({1}, ctx);
  const auto r = auxiliary_refinement(d, {1, 2, 3});
  const auto decs = find_s_decompositions(d, r, 1);
  ASSERT_FALSE(decs.empty());
  for (const auto& dec : decs) {
    EXPECT_EQ(dec.t, 2);
    EXPECT_TRUE(dec.l_block.empty());
    EXPECT_EQ(dec.ambient.apply_N(dec.e_t), dec.e_s);
    EXPECT_LT(dec.k_s[0], dec.k_t[0]);
    ASSERT_TRUE(is_perfect(dec));
  }
  EXPECT_ERROR_KIND(find_s_decompositions(d, r, 2), ErrorKind::NotMarked);
}

TEST(Perfect, NeedsIncreasingWeights) {
  // N e2 = e1 but Fil^0 = E e1, so k_1 = 0 >= k_2 = -1.
  const auto ctx = C(3, 1, 1);
  FilteredPhiNModule d = tensor_source_module(2, {0}, {-1}, {0}, ctx);
  d.filtration[0] = {{-1, Subspace::full(2)}, {0, Subspace::span(2, {{1, 0}})}};
  ASSERT_TRUE(validate(d).ok());
  const auto r = refinement_from_basis(d, {{1, 0}, {0, 1}});
  for (const auto& dec : find_s_decompositions(d, r, 1)) EXPECT_FALSE(is_perfect(dec));
  EXPECT_FALSE(is_strongly_marked(d, r, 1));
  EXPECT_ERROR_KIND(l_invariant(d, r, 1, 2), ErrorKind::NotStronglyMarked);
}

TEST(StronglyMarked, AdjacentCase) {
  const auto ctx = C(2, 2, 1);
  const auto d = tensor_source_module(2, {1, 2}, {0, -3}, {1, 4}, ctx);
  const auto r = refinement_from_basis(d, {{1, 0}, {0, 1}});
  EXPECT_TRUE(is_strongly_marked(d, r, 1));
  EXPECT_FALSE(is_strongly_marked(d, r, 2));
}

TEST(StronglyMarked, EqualWeightsFail) {
  // Fil jumps all at 0: gr_1 and gr_2 both weight 0.
  const auto ctx = C(3, 1, 1);
  FilteredPhiNModule d = tensor_source_module(2, {0}, {-1}, {0}, ctx);
  d.filtration[0] = {{0, Subspace::full(2)}};
  const auto r = refinement_from_basis(d, {{1, 0}, {0, 1}});
  EXPECT_FALSE(is_strongly_marked(d, r, 1));
}

TEST(WellDefined, AuxiliaryAllAgree) {
  const auto ctx = C(3, 1, 2);
  const auto d = auxiliary_module({Scalar(4, 3), -1}, ctx);
  const auto rep = check_well_defined(d, auxiliary_refinement(d, {1, 2, 3}), 1, 2);
  EXPECT_TRUE(rep.consistent);
  EXPECT_GE(rep.perfect, 1);
  EXPECT_EQ(rep.value, (std::vector<Scalar>{Scalar(4, 3), -1}));
}

TEST(WellDefined, SeveralDecompositions) {
  // Rank 4 source: the middle block admits a family of complements.
  const auto ctx = C(2, 1, 1);
  const auto d = tensor_source_module(4, {Scalar(7, 2)}, {0}, {2}, ctx);
  const auto r = refinement_from_basis(d, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  const auto rep = check_well_defined(d, r, 1, 4);
  EXPECT_TRUE(rep.consistent);
  EXPECT_GT(rep.perfect, 1);
  EXPECT_EQ(rep.value, (std::vector<Scalar>{Scalar(7, 2)}));
}

TEST(Duality, AuxiliaryTransport) {
  const auto ctx = C(5, 1, 1);
  const auto d = auxiliary_module({Scalar(1, 5)}, ctx);
  const auto rep = duality_transport(d, auxiliary_refinement(d, {1, 2, 3}), 1);
  EXPECT_EQ(rep.dual_s, 2);
  EXPECT_EQ(rep.dual_t, 3);
  EXPECT_TRUE(rep.holds());
  EXPECT_TRUE(rep.strongly);
}
