#pragma once

// Filtered (phi,N)-modules over K0 (x) E. Everything is stored componentwise:
// component c holds an n x n matrix over E, and
//   phi(v)^(c) = Phi_c v^(c+1),   N(v)^(c) = N_c v^(c),
// with component indices taken mod f. The filtration of D_tau lives on the
// component tau restricts to.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "phinlab/exact.hpp"
#include "phinlab/matrix.hpp"
#include "phinlab/subspace.hpp"

namespace phinlab {

struct FiltrationStep {
  int jump;
  Subspace space;
  bool operator==(const FiltrationStep& o) const { return jump == o.jump && space == o.space; }
};

/// Fil^i = steps[k].space for steps[k-1].jump < i <= steps[k].jump; the first
/// space is the whole space and Fil^i = 0 above the last jump.
using Filtration = std::vector<FiltrationStep>;

Subspace fil_at(const Filtration& fil, int i, int n);

/// Jumps with multiplicity, ascending.
std::vector<int> filtration_weights(const Filtration& fil);

/// Builds the canonical step list from a filtration known to be constant
/// between consecutive candidate jumps.
Filtration make_filtration(int n, std::vector<int> candidates, const std::function<Subspace(int)>& fil);

/// One subspace per Frobenius component.
using Submodule = std::vector<Subspace>;
/// One coordinate vector per Frobenius component.
using ModuleVector = std::vector<Vec>;

class FilteredPhiNModule {
 public:
  FieldContext ctx;
  int n = 0;
  std::vector<Matrix> phi;           // f matrices
  std::vector<Matrix> N;             // f matrices
  std::vector<Filtration> filtration;  // ef filtrations

  int f() const { return ctx.f(); }
  int component_of(int tau) const { return ctx.restriction(tau); }

  /// E-linear matrix of phi^f on component c: Phi_c Phi_{c+1} ... Phi_{c+f-1}.
  Matrix phi_f(int c = 0) const;

  Submodule apply_phi(const Submodule& w) const;
  Submodule apply_N(const Submodule& w) const;
  ModuleVector apply_phi(const ModuleVector& v) const;
  ModuleVector apply_N(const ModuleVector& v) const;

  Submodule zero_submodule() const { return Submodule(f(), Subspace::zero(n)); }
  Submodule full_submodule() const { return Submodule(f(), Subspace::full(n)); }

  /// Transports a phi^f-stable subspace of component 0 to the phi-stable
  /// submodule it generates.
  Submodule propagate(const Subspace& w0) const;
  ModuleVector propagate(const Vec& v0) const;

  bool operator==(const FilteredPhiNModule& o) const {
    return ctx == o.ctx && n == o.n && phi == o.phi && N == o.N && filtration == o.filtration;
  }
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const FilteredPhiNModule& d);
/// Throws Error(ValidationError) naming the first violated invariant.
void require_valid(const FilteredPhiNModule& d);

bool is_free(const Submodule& w);
bool is_stable(const FilteredPhiNModule& d, const Submodule& w);
bool contains(const Submodule& big, const Submodule& small);
Submodule sum(const Submodule& x, const Submodule& y);
Submodule intersect(const Submodule& x, const Submodule& y);
/// Common E-dimension of the components; -1 when they differ.
int submodule_rank(const Submodule& w);

FilteredPhiNModule construct_rank1(const Scalar& a, const std::vector<int>& jumps, const FieldContext& ctx);
FilteredPhiNModule unit_object(const FieldContext& ctx);

FilteredPhiNModule tensor(const FilteredPhiNModule& d1, const FilteredPhiNModule& d2);
FilteredPhiNModule dual(const FilteredPhiNModule& d);

/// Rewrites D in a new basis: column k of basis[c] is the k-th new basis
/// vector on component c.
FilteredPhiNModule change_basis(const FilteredPhiNModule& d, const std::vector<Matrix>& basis);

/// Submodule spanned by the given rows (one row matrix per component), in that
/// basis, with the induced filtration.
FilteredPhiNModule sub(const FilteredPhiNModule& d, const std::vector<Matrix>& basis_rows);
FilteredPhiNModule sub(const FilteredPhiNModule& d, const Submodule& w);

/// Quotient by the span of `basis_rows`. The quotient basis is the image of
/// `complement_rows` when given, else of the first standard vectors outside.
FilteredPhiNModule quotient(const FilteredPhiNModule& d, const std::vector<Matrix>& basis_rows,
                            const std::optional<std::vector<Matrix>>& complement_rows = std::nullopt);
FilteredPhiNModule quotient(const FilteredPhiNModule& d, const Submodule& w);

Scalar newton_number(const FilteredPhiNModule& d);
Scalar hodge_number(const FilteredPhiNModule& d);
/// Per-embedding jump multisets, i.e. the Hodge-Tate weights.
std::vector<std::vector<int>> hodge_tate_weights(const FilteredPhiNModule& d);

/// Distinct rational eigenvalues of phi^f on component 0, ascending, with an
/// eigenvector for each. Throws EigenvalueDegeneracy or EigenvaluesNotRational.
struct Eigenpair {
  Scalar value;
  Vec vector;
};
std::vector<Eigenpair> distinct_phi_f_eigenpairs(const FilteredPhiNModule& d);

struct AdmissibilityResult {
  bool admissible = false;
  Scalar t_H;
  Scalar t_N;
  std::optional<Submodule> witness;  // violating stable submodule
  int stable_submodules = 0;
};
AdmissibilityResult is_weakly_admissible(const FilteredPhiNModule& d);

}  // namespace phinlab
