#include "singlet6/optics.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace singlet6 {

namespace {

constexpr double kIsometryTol = 1e-12;

Complex dot(const ModeMap::Rule& a, const ModeMap::Rule& b) {
  Complex acc{0, 0};
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      if (ma == mb) acc += std::conj(ca) * cb;
    }
  }
  return acc;
}

}  // namespace

JonesMatrix waveplate(WavePlate kind, double theta) {
  const double delta = kind == WavePlate::Half ? std::numbers::pi : std::numbers::pi / 2.0;
  const Complex e = std::polar(1.0, delta);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  // R(theta) diag(1, e^{i delta}) R(-theta)
  JonesMatrix j;
  j(0, 0) = c * c + e * s * s;
  j(0, 1) = c * s - e * s * c;
  j(1, 0) = s * c - e * c * s;
  j(1, 1) = s * s + e * c * c;
  return j;
}

ModeMap ModeMap::identity() { return ModeMap{}; }

ModeMap ModeMap::beamsplitter(Spatial in, Spatial out1, Spatial out2, Complex t,
                              Complex r) {
  if (std::abs(std::norm(t) + std::norm(r) - 1.0) > kIsometryTol) {
    throw std::invalid_argument("beamsplitter amplitudes must satisfy |t|^2 + |r|^2 = 1");
  }
  ModeMap map;
  for (Pol pol : {Pol::H, Pol::V}) {
    map.rules_[{in, pol}] = {{{out1, pol}, t}, {{out2, pol}, r}};
  }
  map.finalize();
  return map;
}

ModeMap ModeMap::three_way_split(Spatial in, const std::array<Spatial, 3>& outs,
                                 const std::array<Complex, 3>& amps) {
  double n2 = 0.0;
  for (const auto& a : amps) n2 += std::norm(a);
  if (std::abs(n2 - 1.0) > kIsometryTol) {
    throw std::invalid_argument("three-way split amplitudes must be normalized");
  }
  ModeMap map;
  for (Pol pol : {Pol::H, Pol::V}) {
    Rule rule;
    for (int k = 0; k < 3; ++k) rule.emplace_back(PolMode{outs[k], pol}, amps[k]);
    map.rules_[{in, pol}] = std::move(rule);
  }
  for (int k = 0; k < 3; ++k) {
    if (amps[k] == Complex{0, 0}) {
      std::ostringstream msg;
      msg << "degenerate for post-selection: zero amplitude into mode "
          << to_string(outs[k]);
      map.warnings_.push_back(msg.str());
    }
  }
  map.finalize();
  return map;
}

ModeMap ModeMap::polarization(Spatial mode, const JonesMatrix& jones) {
  if (!jones.is_unitary(kIsometryTol)) {
    throw std::invalid_argument("polarization element must be unitary");
  }
  ModeMap map;
  // Column p of the Jones matrix is the image of polarization p.
  map.rules_[{mode, Pol::H}] = {{{mode, Pol::H}, jones(0, 0)}, {{mode, Pol::V}, jones(1, 0)}};
  map.rules_[{mode, Pol::V}] = {{{mode, Pol::H}, jones(0, 1)}, {{mode, Pol::V}, jones(1, 1)}};
  map.finalize();
  return map;
}

ModeMap ModeMap::merged(const ModeMap& first, const ModeMap& second) {
  ModeMap map;
  map.rules_ = first.rules_;
  for (const auto& [in, rule] : second.rules_) {
    if (!map.rules_.emplace(in, rule).second) {
      throw std::invalid_argument("merged mode maps must have disjoint inputs");
    }
  }
  map.warnings_ = first.warnings_;
  map.warnings_.insert(map.warnings_.end(), second.warnings_.begin(),
                       second.warnings_.end());
  map.finalize();
  return map;
}

ModeMap ModeMap::then(const ModeMap& next) const {
  ModeMap map;
  std::set<PolMode> first_outputs;
  for (const auto& [in, rule] : rules_) {
    Rule composed;
    for (const auto& [mid, amp] : rule) {
      first_outputs.insert(mid);
      for (const auto& [out, amp2] : next.image(mid)) {
        composed.emplace_back(out, amp * amp2);
      }
    }
    map.rules_[in] = std::move(composed);
  }
  // Inputs handled only by the second stage pass through it directly, unless
  // the first stage already feeds that port.
  for (const auto& [in, rule] : next.rules_) {
    if (!first_outputs.contains(in)) map.rules_.emplace(in, rule);
  }
  map.warnings_ = warnings_;
  map.warnings_.insert(map.warnings_.end(), next.warnings_.begin(), next.warnings_.end());
  map.finalize();
  return map;
}

ModeMap::Rule ModeMap::image(PolMode in) const {
  auto it = rules_.find(in);
  if (it != rules_.end()) return it->second;
  return {{in, Complex{1, 0}}};
}

void ModeMap::finalize() {
  for (auto& [in, rule] : rules_) {
    // Merge duplicate targets and drop zero amplitudes.
    std::map<PolMode, Complex> merged;
    for (const auto& [out, amp] : rule) merged[out] += amp;
    Rule cleaned;
    for (const auto& [out, amp] : merged) {
      if (std::abs(amp) > kPruneRel) cleaned.emplace_back(out, amp);
    }
    rule = std::move(cleaned);
  }

  for (auto a = rules_.begin(); a != rules_.end(); ++a) {
    if (std::abs(dot(a->second, a->second) - Complex{1, 0}) > kIsometryTol) {
      throw std::invalid_argument("mode map is not an isometry (column not normalized)");
    }
    for (auto b = std::next(a); b != rules_.end(); ++b) {
      if (std::abs(dot(a->second, b->second)) > kIsometryTol) {
        throw std::invalid_argument("mode map is not an isometry (columns not orthogonal)");
      }
    }
  }
}

FockVector apply_mode_map(const ModeMap& map, const FockVector& v) {
  // Guard: an occupied unmapped mode that also appears as an output would
  // break norm preservation.
  std::set<PolMode> outputs;
  for (const auto& [in, rule] : map.rules()) {
    for (const auto& [out, amp] : rule) outputs.insert(out);
  }
  FockVector result;
  for (const auto& [ket, amplitude] : v.terms()) {
    CreationPolynomial poly = CreationPolynomial::constant(amplitude);
    for (const auto& [mode, count] : ket.occupations()) {
      if (!map.rules().contains(mode) && outputs.contains(mode)) {
        throw std::invalid_argument("mode map output collides with an occupied unmapped mode");
      }
      CreationPolynomial image;
      for (const auto& [out, amp] : map.image(mode)) {
        image += CreationPolynomial::monomial(amp, {{out, 1}});
      }
      poly = poly * poly_power(image, count);
      // Undo the sqrt(count!) normalization of the source ket.
      double f = 1.0;
      for (int k = 2; k <= count; ++k) f *= k;
      poly *= Complex{1.0 / std::sqrt(f), 0};
    }
    result += apply_to_vacuum(poly);
  }
  result.prune();
  return result;
}

}  // namespace singlet6
