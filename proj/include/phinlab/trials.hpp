#pragma once

// Randomized property suites. Each trial draws its own generator from
// (seed, index), so serial and parallel runs see identical inputs and results
// land in trial order.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "phinlab/refinement.hpp"

namespace phinlab {

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

struct TrialResult {
  bool pass = true;
  std::string detail;
  int checks = 0;       // sub-assertions evaluated
  int interesting = 0;  // non-vacuous cases (e.g. marked pairs, multiple decompositions)
  bool operator==(const TrialResult& o) const {
    return pass == o.pass && detail == o.detail && checks == o.checks && interesting == o.interesting;
  }
};

using TrialFn = std::function<TrialResult(std::uint64_t seed)>;

/// Exceptions escaping a trial are recorded as failures.
std::vector<TrialResult> run_trials(int count, std::uint64_t seed, const TrialFn& fn, Execution exec);

struct SuiteSummary {
  int trials = 0;
  int failures = 0;
  int checks = 0;
  int interesting = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
};
SuiteSummary summarize(const std::vector<TrialResult>& results);

// Property trials.
TrialResult marked_criterion_trial(std::uint64_t seed);     // N_F markedness vs intersection criterion
TrialResult nf_duality_trial(std::uint64_t seed);           // pairing identity, marked bijection, strong duality
TrialResult well_defined_trial(std::uint64_t seed);         // all perfect decompositions agree
TrialResult linvariant_shape_trial(std::uint64_t seed);     // adjacent case, scaling, semisimple existence
TrialResult cgs_derivation_trial(std::uint64_t seed);       // residual = 0 iff auxiliary relation
TrialResult module_ops_trial(std::uint64_t seed);           // validate/additivity/dual sign on random modules
TrialResult rank1_admissibility_trial(std::uint64_t seed);  // admissible iff t_H = v_p(a)
TrialResult tensor_additivity_trial(std::uint64_t seed);    // t_N, t_H of a tensor product
TrialResult pairing_bilinearity_trial(std::uint64_t seed);  // cup product is bilinear

struct NamedSuite {
  const char* name;
  TrialFn fn;
};
std::vector<NamedSuite> suites_for(const std::string& command);

}  // namespace phinlab
