#include "singlet6/postselect.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace singlet6 {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490;

const Mat2 kHadamard{{Complex{kInvSqrt2, 0}, Complex{kInvSqrt2, 0},
                      Complex{kInvSqrt2, 0}, Complex{-kInvSqrt2, 0}}};

// Rebuilds an n-qubit state from basis patterns; bit 0 letters are H/D.
QubitState from_pattern(
    std::vector<Spatial> modes,
    std::initializer_list<std::pair<std::string_view, double>> terms) {
  std::vector<Complex> amps(std::size_t{1} << modes.size(), Complex{0, 0});
  for (const auto& [letters, amp] : terms) {
    std::size_t idx = 0;
    for (char ch : letters) {
      idx <<= 1;
      if (ch == 'V' || ch == 'A') idx |= 1;
    }
    amps[idx] += amp;
  }
  return {std::move(modes), std::move(amps)};
}

}  // namespace

PostselectResult postselect_one_per_mode(const FockVector& v,
                                         const std::vector<Spatial>& modes) {
  const int n = static_cast<int>(modes.size());
  if (n < 1 || n > 6) throw std::invalid_argument("post-selection needs 1..6 modes");

  std::vector<Complex> amps(std::size_t{1} << n, Complex{0, 0});
  double kept_norm2 = 0.0;
  for (const auto& [ket, amplitude] : v.terms()) {
    if (ket.total_photons() != n) continue;
    std::size_t index = 0;
    bool keep = true;
    for (int q = 0; q < n && keep; ++q) {
      const int n_h = ket.occupation({modes[q], Pol::H});
      const int n_v = ket.occupation({modes[q], Pol::V});
      if (n_h + n_v != 1) {
        keep = false;
        break;
      }
      index = (index << 1) | static_cast<std::size_t>(n_v);
    }
    if (!keep) continue;
    amps[index] += amplitude;
    kept_norm2 += std::norm(amplitude);
  }

  if (kept_norm2 <= 0.0) throw std::domain_error("post-selection impossible");
  return {QubitState(modes, std::move(amps)), kept_norm2};
}

ProjectionResult project_qubit(const QubitState& s, int position,
                               const std::array<Complex, 2>& onto) {
  const int n = s.n_qubits();
  if (position < 0 || position >= n) throw std::invalid_argument("invalid qubit position");
  if (n < 2) throw std::invalid_argument("cannot project the last remaining qubit");
  const double bra_norm = std::sqrt(std::norm(onto[0]) + std::norm(onto[1]));
  if (std::abs(bra_norm - 1.0) > 1e-12) {
    throw std::invalid_argument("projection state must be normalized");
  }

  const int low_bits = n - 1 - position;
  const std::size_t low_mask = (std::size_t{1} << low_bits) - 1;
  std::vector<Complex> rest(std::size_t{1} << (n - 1), Complex{0, 0});
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const int b = s.bit(i, position);
    const std::size_t reduced = ((i >> (low_bits + 1)) << low_bits) | (i & low_mask);
    rest[reduced] += std::conj(onto[b]) * s.amplitude(i);
  }

  double prob = 0.0;
  for (const auto& a : rest) prob += std::norm(a);
  if (prob <= 1e-300) throw std::domain_error("zero-probability projection");

  std::vector<Spatial> modes = s.modes();
  modes.erase(modes.begin() + position);
  return {QubitState(std::move(modes), std::move(rest)), prob};
}

std::array<Complex, 2> polarization_ket(char letter) {
  switch (letter) {
    case 'H': return {Complex{1, 0}, Complex{0, 0}};
    case 'V': return {Complex{0, 0}, Complex{1, 0}};
    case 'D': return {Complex{kInvSqrt2, 0}, Complex{kInvSqrt2, 0}};
    case 'A': return {Complex{kInvSqrt2, 0}, Complex{-kInvSqrt2, 0}};
    case 'L': return {Complex{kInvSqrt2, 0}, Complex{0, kInvSqrt2}};
    case 'R': return {Complex{kInvSqrt2, 0}, Complex{0, -kInvSqrt2}};
    default: throw std::invalid_argument("unknown polarization letter");
  }
}

QubitState conditional_reference(Spatial mode, char outcome) {
  const double s2 = std::sqrt(2.0);
  const double s3 = std::sqrt(3.0);
  const double s6 = std::sqrt(6.0);

  if (mode == Spatial::F && (outcome == 'V' || outcome == 'H')) {
    const std::vector<Spatial> modes = {Spatial::A, Spatial::B, Spatial::C,
                                        Spatial::D, Spatial::E};
    if (outcome == 'V') {
      // (1/sqrt2)|HHHVV> - (1/sqrt3)|W3>|Psi2+> + (1/sqrt6)|W3bar>|HH>
      return from_pattern(modes, {{"HHHVV", 1.0 / s2},
                                  {"HHVHV", -1.0 / (s3 * s3 * s2)},
                                  {"HHVVH", -1.0 / (s3 * s3 * s2)},
                                  {"HVHHV", -1.0 / (s3 * s3 * s2)},
                                  {"HVHVH", -1.0 / (s3 * s3 * s2)},
                                  {"VHHHV", -1.0 / (s3 * s3 * s2)},
                                  {"VHHVH", -1.0 / (s3 * s3 * s2)},
                                  {"VVHHH", 1.0 / (s6 * s3)},
                                  {"VHVHH", 1.0 / (s6 * s3)},
                                  {"HVVHH", 1.0 / (s6 * s3)}});
    }
    // -(1/sqrt2)|VVVHH> + (1/sqrt3)|W3bar>|Psi2+> - (1/sqrt6)|W3>|VV>
    return from_pattern(modes, {{"VVVHH", -1.0 / s2},
                                {"VVHHV", 1.0 / (s3 * s3 * s2)},
                                {"VVHVH", 1.0 / (s3 * s3 * s2)},
                                {"VHVHV", 1.0 / (s3 * s3 * s2)},
                                {"VHVVH", 1.0 / (s3 * s3 * s2)},
                                {"HVVHV", 1.0 / (s3 * s3 * s2)},
                                {"HVVVH", 1.0 / (s3 * s3 * s2)},
                                {"HHVVV", -1.0 / (s6 * s3)},
                                {"HVHVV", -1.0 / (s6 * s3)},
                                {"VHHVV", -1.0 / (s6 * s3)}});
  }

  if (mode == Spatial::B && (outcome == 'H' || outcome == 'V')) {
    const std::vector<Spatial> modes = {Spatial::A, Spatial::C, Spatial::D,
                                        Spatial::E, Spatial::F};
    // Patterns in D/A letters (D -> bit 0); rotated to computational
    // amplitudes at the end. The first two qubits carry the pair factor, the
    // last three the W-state factor.
    const double pair_sign = outcome == 'H' ? 1.0 : -1.0;
    const double w = 1.0 / (s6 * s2 * s3);    // 1/sqrt6 * Psi2+ * W amplitudes
    const double aa = 1.0 / (s6 * s2 * s3);   // 1/sqrt6 * (1/sqrt2) * W amplitudes
    std::initializer_list<std::pair<std::string_view, double>> terms = {
        // GHZ5 block: (DDAAA -+ AADDD)/2
        {"DDAAA", 0.5},
        {"AADDD", outcome == 'H' ? -0.5 : 0.5},
        // +-(1/sqrt6)(Psi2+ +- (1/sqrt2)|AA>) (x) W3
        {"DADDA", pair_sign * w}, {"DADAD", pair_sign * w}, {"DAADD", pair_sign * w},
        {"ADDDA", pair_sign * w}, {"ADDAD", pair_sign * w}, {"ADADD", pair_sign * w},
        {"AADDA", aa}, {"AADAD", aa}, {"AAADD", aa},
        // -(1/sqrt6)(Psi2+ +- (1/sqrt2)|DD>) (x) W3bar
        {"DAAAD", -w}, {"DAADA", -w}, {"DADAA", -w},
        {"ADAAD", -w}, {"ADADA", -w}, {"ADDAA", -w},
        {"DDAAD", -pair_sign * aa}, {"DDADA", -pair_sign * aa}, {"DDDAA", -pair_sign * aa},
    };
    const QubitState pattern_state = from_pattern(modes, terms);
    return local_unitary(pattern_state, kHadamard);
  }

  throw std::invalid_argument("no closed-form reference for this projection");
}

}  // namespace singlet6
