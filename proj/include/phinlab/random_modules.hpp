#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "phinlab/module.hpp"
#include "phinlab/refinement.hpp"

namespace phinlab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool chance(int percent) { return uniform(0, 99) < percent; }
  /// num/den with |num| <= span and 1 <= den <= 4.
  Scalar small_rational(int span = 5);
  Scalar nonzero_rational(int span = 5);
  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs.at(uniform(0, static_cast<int>(xs.size()) - 1));
  }

 private:
  std::mt19937_64 gen_;
};

/// p in {2,3,5}, e and f in {1,2}, or within the given bounds.
FieldContext random_context(Rng& rng, int max_degree = 4);

/// Invertible n x n matrix with small entries.
Matrix random_invertible(Rng& rng, int n);

struct RandomInstance {
  FilteredPhiNModule d;
  Refinement r;
  bool semisimple = false;  // phi^f diagonalizable by construction
};

struct InstanceOptions {
  int min_rank = 1;
  int max_rank = 4;
  bool distinct_eigenvalues = false;
  bool change_basis = true;
};

/// Upper-triangular phi with designed phi^f eigenvalues u p^{f h}, N a random
/// solution of the phi-N relation, a random filtration per embedding, all
/// conjugated by a random change of basis. The standard flag becomes `r`.
RandomInstance random_instance(Rng& rng, const FieldContext& ctx, const InstanceOptions& opt = {});

/// A rank 3 or 4 module with (1, n) marked and several perfect
/// 1-decompositions, conjugated by a random change of basis.
RandomInstance random_decomposable_instance(Rng& rng, const FieldContext& ctx);

}  // namespace phinlab
