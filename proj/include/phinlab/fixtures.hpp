#pragma once

#include <vector>

#include "phinlab/linvariant.hpp"
#include "phinlab/module.hpp"
#include "phinlab/refinement.hpp"

namespace phinlab {

/// Rank-3 module on f1, f2, f3 with phi^f = diag(p^-f, 1, 1), N f2 = -f1,
/// N f3 = f1, and per tau
///   Fil^i = D                                  for i <= lowest_jump,
///   Fil^i = E(f2 - L f1) + E(f3 + L f1)       for lowest_jump < i <= 0,
///   Fil^i = 0                                  for i > 0.
/// `lowest_jump` must be negative; -1 gives Fil^{-1} = D.
FilteredPhiNModule auxiliary_module(const std::vector<Scalar>& L, const FieldContext& ctx, int lowest_jump = -1);

/// The refinement spanned by f1, then f_{order[1]}, then f_{order[2]}
/// (order is {1,2,3} or {1,3,2}).
Refinement auxiliary_refinement(const FilteredPhiNModule& d, const std::vector<int>& order);

/// Rank-n source with phi = diag(1/p, 1, ..., 1) on every component, N e_n = e_1
/// and, per tau with a < b,
///   Fil^i = D for i <= a,  E(e_n + L e_1) + M for a < i <= b,  M for b < i <= b+1,
/// where M is spanned by e_2..e_{n-1}. The standard flag is a refinement with
/// (1, n) marked and a perfect 1-decomposition.
FilteredPhiNModule tensor_source_module(int n, const std::vector<Scalar>& L, const std::vector<int>& a,
                                        const std::vector<int>& b, const FieldContext& ctx);

struct TensorFixtures {
  FilteredPhiNModule big;    // D2* (x) D1, rank 4
  FilteredPhiNModule block;  // rank-3 submodule on e1*(x)e1, en*(x)e1, en*(x)en
  PerfectWitness witness;
  std::vector<int> k_s, k_t;
};

/// Runs quotient / dual / tensor / sub on a perfect 1-decomposition of D for
/// the pair (1, n). Throws NoPerfectDecomposition.
TensorFixtures tensor_fixtures(const FilteredPhiNModule& d, const Refinement& r);
TensorFixtures tensor_fixtures(int n, const std::vector<Scalar>& L, const std::vector<int>& a, const std::vector<int>& b,
                               const FieldContext& ctx);

/// The rank-3 block written down directly from the witness data:
/// phi = diag(1, 1/p, 1), N(x1) = -x2, N(x3) = x2, and with A = (0, L, 1),
/// B = (1, -L, 0): Fil^i is everything for i <= k'_s - k'_t, otherwise the span
/// of A (when i <= k_t - k'_t) and B (when i <= k'_s - k_s).
FilteredPhiNModule tensor_block_closed_form(const FieldContext& ctx, const std::vector<int>& k_s,
                                            const std::vector<int>& k_t, const PerfectWitness& w);

}  // namespace phinlab
