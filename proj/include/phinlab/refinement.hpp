#pragma once

#include <map>
#include <string>
#include <vector>

#include "phinlab/module.hpp"

namespace phinlab {

/// A complete phi,N-stable flag F_0 = 0 < F_1 < ... < F_n = D with graded
/// pieces free of rank 1. `flag` holds all n+1 steps.
struct Refinement {
  std::vector<Submodule> flag;
  int n() const { return static_cast<int>(flag.size()) - 1; }
  const Submodule& step(int i) const { return flag.at(i); }
  bool operator==(const Refinement& o) const { return flag == o.flag; }
};

/// `steps` lists F_1..F_n. Throws NotAFlag, WrongGradedRank or NotStable.
Refinement validate_refinement(const FilteredPhiNModule& d, const std::vector<Submodule>& steps);

/// F_i spanned by the first i vectors, the same coordinates on every component.
Refinement refinement_from_basis(const FilteredPhiNModule& d, const std::vector<Vec>& basis);

enum class Execution { Serial, Parallel };

/// All refinements, ordered lexicographically by the eigenvalue sequence
/// (eigenvalues compared as rationals). Throws EigenvalueDegeneracy.
std::vector<Refinement> enumerate_refinements(const FilteredPhiNModule& d, Execution exec = Execution::Serial);

/// Generator of gr_i on each component: the first basis vector of F_i outside
/// F_{i-1}. Index 0 is gr_1.
std::vector<ModuleVector> graded_generators(const Refinement& r);

struct GradedData {
  std::vector<Scalar> alphas;              // phi^f on gr_i, component 0
  std::vector<std::vector<int>> weights;   // weights[i][tau]
};
GradedData graded_data(const FilteredPhiNModule& d, const Refinement& r);

/// phi(v_i) = mu_i v_i modulo F_{i-1}, as an element of K0 (x) E.
std::vector<SemilinearScalar> graded_phi(const FilteredPhiNModule& d, const Refinement& r);

struct NFEntry {
  int target = 0;           // 1-based j with N_F(gr_i) = gr_j; 0 means N_F vanishes on gr_i
  SemilinearScalar lambda;  // N_F(v_i) = lambda v_j
};

struct NFOperator {
  std::vector<NFEntry> entries;  // index i-1
};
NFOperator compute_NF(const FilteredPhiNModule& d, const Refinement& r);

/// Each nonzero entry is a unit of K0 (x) E (never a proper nonzero image).
bool nf_well_formed(const NFOperator& nf);
/// N_F phi_F = p phi_F N_F on the graded module.
bool nf_commutes_with_phi(const FilteredPhiNModule& d, const Refinement& r, const NFOperator& nf);

struct MarkedIndexMap {
  std::map<int, int> t_of;  // marked s -> t_F(s)
  std::map<int, int> s_of;  // t -> s_F(t)
  std::vector<int> marked() const;
};
MarkedIndexMap marked_indices(const NFOperator& nf);
MarkedIndexMap marked_indices(const FilteredPhiNModule& d, const Refinement& r);

/// N F_{t-1} cap F_s = N F_{t-1} cap F_{s-1} and N F_t cap F_s strictly
/// contains N F_t cap F_{s-1}, on every component.
bool check_marked_criterion(const FilteredPhiNModule& d, const Refinement& r, int s, int t);

/// Annihilator flag on dual(d): dual step i is the annihilator of F_{n-i}.
Refinement dual_refinement(const FilteredPhiNModule& d, const Refinement& r);

/// G[i][k] = <u_i, v_k> for the dual generators u and the generators v, a
/// K0 (x) E value that vanishes unless k = n+1-i (indices 0-based inside).
std::vector<std::vector<SemilinearScalar>> graded_pairing(const FilteredPhiNModule& d, const Refinement& r);

/// <N_dual x, y> + <x, N_F y> = 0 on all graded basis vectors.
bool check_nf_duality(const FilteredPhiNModule& d, const Refinement& r);

struct CharacterSketch {
  Scalar alpha;
  std::vector<int> weights;  // per tau
  Scalar value_at_pi;        // recorded as alpha
  std::string smooth_tag;    // never evaluated
};
std::vector<CharacterSketch> refinement_to_parameters(const FilteredPhiNModule& d, const Refinement& r);

}  // namespace phinlab
