#pragma once

// Classes in H^1(G_K, E) and H^1(G_K, E(1)) by their coordinates, and the cup
// product into the line spanned by psi_0 cup [(p)].

#include <vector>

#include "phinlab/exact.hpp"
#include "phinlab/family.hpp"
#include "phinlab/matrix.hpp"

namespace phinlab {

/// a0 psi_0 + sum_tau a_tau psi_tau.
struct UnramifiedClass {
  Scalar a0;
  std::vector<Scalar> a;
};

/// b0 [(p)] + exp(b), b in K (x) E split along the embeddings.
struct KummerClass {
  Scalar b0;
  std::vector<Scalar> b;
};

/// a0 b0 - sum_tau a_tau b_tau.
Scalar cup_product(const UnramifiedClass& x, const KummerClass& y);

/// True iff every a_tau vanishes.
bool is_de_rham_cocycle(const UnramifiedClass& x);

/// gamma_{2,0} - gamma_{3,0} == sum_tau L_tau (gamma_{2,tau} - gamma_{3,tau}).
bool aux_relation_check(const GammaCoefficients& g2, const GammaCoefficients& g3, const std::vector<Scalar>& L);

/// Gram matrix on the bases (psi_0, psi_tau) x ([(p)], exp(e_tau)).
Matrix pairing_matrix(int degree);

/// Unramified classes pairing to zero with every Kummer class.
std::vector<Vec> pairing_kernel(int degree);

}  // namespace phinlab
