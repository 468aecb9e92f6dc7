#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "singlet6/qubits.hpp"
#include "singlet6/rng.hpp"

namespace singlet6 {

// Analyzer basis for one qubit. `analyzer` holds the rotation whose rows are
// the measurement bras, so outcome bit 0 is the first-listed eigenstate
// (H, D or L) and bit 1 its orthogonal partner.
struct QubitBasis {
  enum class Kind { Z, X, Y, Custom };

  Kind kind = Kind::Z;
  Mat2 analyzer = Mat2::identity();
  char letter0 = 'H';
  char letter1 = 'V';

  static QubitBasis z();
  static QubitBasis x();
  static QubitBasis y();
  // Measures in the basis {u|H>, u|V>}.
  static QubitBasis custom(const Mat2& u);
};

class MeasurementSetting {
 public:
  explicit MeasurementSetting(std::vector<QubitBasis> bases);
  static MeasurementSetting uniform(const QubitBasis& basis, int n_qubits);
  // One letter per qubit out of {x, y, z}.
  static MeasurementSetting from_letters(std::string_view letters);

  int n_qubits() const { return static_cast<int>(bases_.size()); }
  const std::vector<QubitBasis>& bases() const { return bases_; }

  std::string outcome_label(std::size_t index) const;  // e.g. "HHHVVV"
  std::optional<std::size_t> parse_label(std::string_view label) const;
  std::string letters() const;  // "zzzzzz", or "custom" when not letter-formed

 private:
  std::vector<QubitBasis> bases_;
};

struct OutcomeDistribution {
  std::vector<double> probs;

  int n_qubits() const;
};

OutcomeDistribution outcome_distribution(const QubitState& state,
                                         const MeasurementSetting& setting);
OutcomeDistribution outcome_distribution(const DensityOperator& rho,
                                         const MeasurementSetting& setting);

// E = sum_o (-1)^{weight(o)} P(o), weight = number of bit-1 outcomes.
double correlation(const OutcomeDistribution& d);

struct CountsTable {
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
  MeasurementSetting setting;
  std::optional<std::uint64_t> seed;
};

// Multinomial draw by inverse CDF; deterministic for a given generator state.
CountsTable sample_counts(const OutcomeDistribution& d, std::uint64_t n_events,
                          const MeasurementSetting& setting, Rng& rng);
CountsTable sample_counts(const OutcomeDistribution& d, std::uint64_t n_events,
                          const MeasurementSetting& setting, std::uint64_t seed);

struct CorrelationEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t n_events = 0;
  bool degenerate = false;  // too few events for a meaningful error bar
};

CorrelationEstimate estimate_correlation(const CountsTable& counts);

// std error of a parity correlation estimate: sqrt((1 - E^2)/N).
double correlation_std_error(double e, std::uint64_t n_events);

struct FidelityEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

// White-noise fidelity from the three uniform-setting correlations:
// v = -(Ex+Ey+Ez)/3, F = v + (1-v)/2^n, errors propagated linearly.
FidelityEstimate estimate_fidelity_white_noise(double ex, double ey, double ez,
                                               double sx = 0.0, double sy = 0.0,
                                               double sz = 0.0, int n_qubits = 6);

}  // namespace singlet6
