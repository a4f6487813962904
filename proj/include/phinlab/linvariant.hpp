#pragma once

#include <optional>
#include <vector>

#include "phinlab/module.hpp"
#include "phinlab/refinement.hpp"

namespace phinlab {

/// F_t/F_{s-1} = E e_s + L + E e_t, written in the ambient basis formed by the
/// images of the graded generators v_s..v_t (so the induced refinement is the
/// coordinate flag).
struct SDecomposition {
  int s = 0;
  int t = 0;
  FilteredPhiNModule ambient;
  ModuleVector e_s;
  ModuleVector e_t;
  std::vector<ModuleVector> l_block;
  std::vector<int> k_s;  // graded weights of gr_s, per tau
  std::vector<int> k_t;  // graded weights of gr_t, per tau
};

struct PerfectWitness {
  std::vector<int> k_s_prime;
  std::vector<int> k_t_prime;
  std::vector<Scalar> L;
};

using LInvariant = std::vector<Scalar>;

/// One representative per sample of the affine solution families (see README).
/// Throws NotMarked when s is not marked.
std::vector<SDecomposition> find_s_decompositions(const FilteredPhiNModule& d, const Refinement& r, int s);

/// Checks the two filtration displays over the bounded box of (k'_s, k'_t).
std::optional<PerfectWitness> is_perfect(const SDecomposition& dec);

/// L-vector of the first perfect decomposition. Throws NotStronglyMarked.
LInvariant l_invariant(const FilteredPhiNModule& d, const Refinement& r, int s, int t);

bool is_strongly_marked(const FilteredPhiNModule& d, const Refinement& r, int s);

struct WellDefinedReport {
  int decompositions = 0;
  int perfect = 0;
  bool consistent = true;
  LInvariant value;
};
/// Throws NotStronglyMarked.
WellDefinedReport check_well_defined(const FilteredPhiNModule& d, const Refinement& r, int s, int t);

struct DualityReport {
  int s = 0, t = 0;
  int dual_s = 0, dual_t = 0;
  bool dual_marked = false;      // n+1-t marked for the dual refinement with partner n+1-s
  bool strongly = false;
  bool dual_strongly = false;
  bool holds() const { return dual_marked && strongly == dual_strongly; }
};
/// Throws NotMarked.
DualityReport duality_transport(const FilteredPhiNModule& d, const Refinement& r, int s);

}  // namespace phinlab
