#include "singlet6/counting.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace singlet6 {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490;

// Clamp for floating-point dust from basis rotations.
constexpr double kNegativeClamp = -1e-12;

OutcomeDistribution clamp_and_renormalize(std::vector<double> probs) {
  double total = 0.0;
  for (double& p : probs) {
    if (p < 0.0) {
      if (p < kNegativeClamp) throw std::runtime_error("outcome probability below clamp");
      p = 0.0;
    }
    total += p;
  }
  if (total <= 0.0) throw std::runtime_error("outcome distribution has zero mass");
  for (double& p : probs) p /= total;
  return {std::move(probs)};
}

}  // namespace

QubitBasis QubitBasis::z() { return {Kind::Z, Mat2::identity(), 'H', 'V'}; }

QubitBasis QubitBasis::x() {
  Mat2 a;
  a(0, 0) = {kInvSqrt2, 0};
  a(0, 1) = {kInvSqrt2, 0};
  a(1, 0) = {kInvSqrt2, 0};
  a(1, 1) = {-kInvSqrt2, 0};
  return {Kind::X, a, 'D', 'A'};
}

QubitBasis QubitBasis::y() {
  // Rows are <L| and <R| with L = (H + iV)/sqrt2, R = (H - iV)/sqrt2.
  Mat2 a;
  a(0, 0) = {kInvSqrt2, 0};
  a(0, 1) = {0, -kInvSqrt2};
  a(1, 0) = {kInvSqrt2, 0};
  a(1, 1) = {0, kInvSqrt2};
  return {Kind::Y, a, 'L', 'R'};
}

QubitBasis QubitBasis::custom(const Mat2& u) {
  if (!u.is_unitary(1e-12)) throw std::invalid_argument("analyzer basis must be unitary");
  return {Kind::Custom, u.adjoint(), '0', '1'};
}

MeasurementSetting::MeasurementSetting(std::vector<QubitBasis> bases)
    : bases_(std::move(bases)) {
  if (bases_.empty() || bases_.size() > 6) {
    throw std::invalid_argument("setting needs between 1 and 6 qubits");
  }
}

MeasurementSetting MeasurementSetting::uniform(const QubitBasis& basis, int n_qubits) {
  return MeasurementSetting(std::vector<QubitBasis>(n_qubits, basis));
}

MeasurementSetting MeasurementSetting::from_letters(std::string_view letters) {
  std::vector<QubitBasis> bases;
  bases.reserve(letters.size());
  for (char ch : letters) {
    switch (ch) {
      case 'z': case 'Z': bases.push_back(QubitBasis::z()); break;
      case 'x': case 'X': bases.push_back(QubitBasis::x()); break;
      case 'y': case 'Y': bases.push_back(QubitBasis::y()); break;
      default: throw std::invalid_argument("setting letters must be x, y or z");
    }
  }
  return MeasurementSetting(std::move(bases));
}

std::string MeasurementSetting::outcome_label(std::size_t index) const {
  const int n = n_qubits();
  std::string label(n, '?');
  for (int q = 0; q < n; ++q) {
    const bool one = (index >> (n - 1 - q)) & 1u;
    label[q] = one ? bases_[q].letter1 : bases_[q].letter0;
  }
  return label;
}

std::optional<std::size_t> MeasurementSetting::parse_label(std::string_view label) const {
  if (static_cast<int>(label.size()) != n_qubits()) return std::nullopt;
  std::size_t index = 0;
  for (int q = 0; q < n_qubits(); ++q) {
    index <<= 1;
    if (label[q] == bases_[q].letter1) {
      index |= 1;
    } else if (label[q] != bases_[q].letter0) {
      return std::nullopt;
    }
  }
  return index;
}

std::string MeasurementSetting::letters() const {
  std::string out;
  for (const auto& b : bases_) {
    switch (b.kind) {
      case QubitBasis::Kind::Z: out.push_back('z'); break;
      case QubitBasis::Kind::X: out.push_back('x'); break;
      case QubitBasis::Kind::Y: out.push_back('y'); break;
      case QubitBasis::Kind::Custom: return "custom";
    }
  }
  return out;
}

int OutcomeDistribution::n_qubits() const {
  int n = 0;
  while ((std::size_t{1} << n) < probs.size()) ++n;
  return n;
}

OutcomeDistribution outcome_distribution(const QubitState& state,
                                         const MeasurementSetting& setting) {
  if (setting.n_qubits() != state.n_qubits()) {
    throw std::invalid_argument("setting and state size mismatch");
  }
  std::vector<Mat2> rs;
  rs.reserve(setting.bases().size());
  for (const auto& b : setting.bases()) rs.push_back(b.analyzer);
  const QubitState rotated = local_unitary(state, std::span<const Mat2>(rs));
  std::vector<double> probs(state.dim());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    probs[i] = std::norm(rotated.amplitude(i));
  }
  return clamp_and_renormalize(std::move(probs));
}

OutcomeDistribution outcome_distribution(const DensityOperator& rho,
                                         const MeasurementSetting& setting) {
  if (setting.n_qubits() != rho.n_qubits()) {
    throw std::invalid_argument("setting and state size mismatch");
  }
  std::vector<Mat2> rs;
  rs.reserve(setting.bases().size());
  for (const auto& b : setting.bases()) rs.push_back(b.analyzer);
  const DensityOperator rotated = local_unitary(rho, std::span<const Mat2>(rs));
  std::vector<double> probs(std::size_t{1} << rho.n_qubits());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    probs[i] = rotated.matrix()(static_cast<int>(i), static_cast<int>(i)).real();
  }
  return clamp_and_renormalize(std::move(probs));
}

double correlation(const OutcomeDistribution& d) {
  double e = 0.0;
  for (std::size_t i = 0; i < d.probs.size(); ++i) {
    e += (std::popcount(i) % 2 == 0 ? 1.0 : -1.0) * d.probs[i];
  }
  return e;
}

CountsTable sample_counts(const OutcomeDistribution& d, std::uint64_t n_events,
                          const MeasurementSetting& setting, Rng& rng) {
  if (d.probs.size() != (std::size_t{1} << setting.n_qubits())) {
    throw std::invalid_argument("distribution and setting size mismatch");
  }
  std::vector<double> cdf(d.probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < d.probs.size(); ++i) {
    acc += d.probs[i];
    cdf[i] = acc;
  }
  cdf.back() = 1.0;

  CountsTable table{std::vector<std::uint64_t>(d.probs.size(), 0), n_events, setting, {}};
  for (std::uint64_t k = 0; k < n_events; ++k) {
    const double u = rng.uniform();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::size_t bin = std::min<std::size_t>(it - cdf.begin(), cdf.size() - 1);
    ++table.counts[bin];
  }
  return table;
}

CountsTable sample_counts(const OutcomeDistribution& d, std::uint64_t n_events,
                          const MeasurementSetting& setting, std::uint64_t seed) {
  Rng rng(seed);
  CountsTable table = sample_counts(d, n_events, setting, rng);
  table.seed = seed;
  return table;
}

double correlation_std_error(double e, std::uint64_t n_events) {
  if (n_events == 0) return 0.0;
  const double var = std::max(0.0, 1.0 - e * e);
  return std::sqrt(var / static_cast<double>(n_events));
}

CorrelationEstimate estimate_correlation(const CountsTable& counts) {
  if (counts.total == 0) throw std::invalid_argument("counts table has zero total");
  double e = 0.0;
  for (std::size_t i = 0; i < counts.counts.size(); ++i) {
    const double f = static_cast<double>(counts.counts[i]) / static_cast<double>(counts.total);
    e += (std::popcount(i) % 2 == 0 ? 1.0 : -1.0) * f;
  }
  CorrelationEstimate est;
  est.value = e;
  est.std_error = correlation_std_error(e, counts.total);
  est.n_events = counts.total;
  est.degenerate = counts.total < 2 || est.std_error == 0.0;
  return est;
}

FidelityEstimate estimate_fidelity_white_noise(double ex, double ey, double ez,
                                               double sx, double sy, double sz,
                                               int n_qubits) {
  for (double e : {ex, ey, ez}) {
    if (e < -1.0 - 1e-12 || e > 1.0 + 1e-12) {
      throw std::invalid_argument("correlations must lie in [-1, 1]");
    }
  }
  const double dim = static_cast<double>(std::size_t{1} << n_qubits);
  const double v = -(ex + ey + ez) / 3.0;
  const double factor = (1.0 - 1.0 / dim) / 3.0;
  FidelityEstimate est;
  est.value = v + (1.0 - v) / dim;
  est.std_error = factor * std::sqrt(sx * sx + sy * sy + sz * sz);
  return est;
}

}  // namespace singlet6
