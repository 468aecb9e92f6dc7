#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "singlet6/counting.hpp"
#include "singlet6/qubits.hpp"

namespace singlet6 {

enum class WitnessKind { MaxOverlap, Reduced };

struct WitnessOperator {
  WitnessKind label = WitnessKind::MaxOverlap;
  int n_qubits = 0;
  PauliSum form;   // full Pauli expansion
  Matrix dense;    // cached dense matrix

  // For the reduced witness: the multiplier mu with W_red - mu * W_max >= 0,
  // which carries the guarantee that every reduced detection is a max-overlap
  // detection. 1 for the max-overlap witness itself.
  double detection_scale = 1.0;

  double expectation(const QubitState& psi) const;
  double expectation(const DensityOperator& rho) const;
};

// overlap_bound * 1 - |target><target|; overlap_bound in (0, 1).
WitnessOperator witness_max_overlap(const QubitState& target, double overlap_bound);

// Three-setting reduction: keep the non-mixed, non-identity Pauli words of the
// max-overlap witness, then add the smallest constant c such that every state
// detected by the result is detected by the original. The minimal c solves
//   c = min_{mu >= 0} [ bound * mu + lambda_max(Q - mu P) ],
// where P is the target projector and Q the dropped-sign non-mixed part; the
// optimal mu is kept as detection_scale.
WitnessOperator reduce_witness(const WitnessOperator& w);

// White-noise fraction at which the witness stops detecting the target.
double noise_tolerance(const WitnessOperator& w, const QubitState& target);

// Estimator core: every word of type i is a parity marginal of setting i's
// outcome distribution; the identity word contributes its constant.
double witness_expectation_from_distributions(const WitnessOperator& reduced,
                                              const OutcomeDistribution& x,
                                              const OutcomeDistribution& y,
                                              const OutcomeDistribution& z);

struct BootstrapConfig {
  int resamples = 2000;
  std::uint64_t seed = 0;
  double significance = 1.0;  // verdict multiplier k
};

enum class WitnessVerdict { EntanglementDetected, Inconclusive };

struct WitnessReport {
  double expectation = 0.0;
  double std_error = 0.0;
  int n_settings = 3;
  WitnessVerdict verdict = WitnessVerdict::Inconclusive;
  int resamples = 0;
  std::uint64_t seed = 0;
};

// Point estimate from the empirical distributions plus a nonparametric
// bootstrap over the three settings' multinomial counts, resampled
// independently with seeded substreams.
WitnessReport witness_expectation_from_counts(const WitnessOperator& reduced,
                                              const CountsTable& x_counts,
                                              const CountsTable& y_counts,
                                              const CountsTable& z_counts,
                                              const BootstrapConfig& config = {});

// Reference term list for the reduced witness: word, numerator, denominator.
struct WitnessTerm {
  std::string word;
  long long num = 0;
  long long den = 1;
};

std::vector<WitnessTerm> load_witness_terms(const std::string& path);

struct TermMismatch {
  std::string word;
  double reference = 0.0;
  double derived = 0.0;
};

struct WitnessTermDiff {
  int matches = 0;
  std::vector<TermMismatch> mismatches;        // both present, different value
  std::vector<std::string> only_in_reference;  // listed but not derived
  std::vector<std::string> only_in_derived;    // derived but not listed
};

WitnessTermDiff diff_witness_terms(const WitnessOperator& reduced,
                                   const std::vector<WitnessTerm>& reference,
                                   double tol = 1e-12);

}  // namespace singlet6
