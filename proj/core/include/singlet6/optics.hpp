#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "singlet6/fock.hpp"
#include "singlet6/linalg.hpp"

namespace singlet6 {

// 2x2 unitary acting on the (H, V) amplitudes of one spatial mode.
using JonesMatrix = Mat2;

enum class WavePlate { Half, Quarter };

// Retarder with fast axis at angle theta: R(theta) diag(1, e^{i delta}) R(-theta),
// delta = pi for a half-wave plate and pi/2 for a quarter-wave plate.
JonesMatrix waveplate(WavePlate kind, double theta);

// Isometric substitution rule on creation operators. Unmapped modes pass
// through unchanged. Construction validates that the substitution columns are
// orthonormal within 1e-12 and that no output collides with a mapped input.
class ModeMap {
 public:
  using Target = std::pair<PolMode, Complex>;
  using Rule = std::vector<Target>;

  static ModeMap identity();

  // in_P -> t out1_P + r out2_P for both polarizations; |t|^2 + |r|^2 = 1.
  static ModeMap beamsplitter(Spatial in, Spatial out1, Spatial out2, Complex t,
                              Complex r);

  // in_P -> alpha out1_P + beta out2_P + gamma out3_P; amplitudes normalized.
  // A zero amplitude is allowed but flagged as degenerate for post-selection.
  static ModeMap three_way_split(Spatial in, const std::array<Spatial, 3>& outs,
                                 const std::array<Complex, 3>& amps);

  // Wave plate (or any polarization unitary) acting within one spatial mode.
  static ModeMap polarization(Spatial mode, const JonesMatrix& jones);

  // Union of two maps with disjoint inputs (e.g. one splitter per arm).
  static ModeMap merged(const ModeMap& first, const ModeMap& second);

  // Composition: apply *this first, then `next`.
  ModeMap then(const ModeMap& next) const;

  Rule image(PolMode in) const;  // identity rule for unmapped modes
  const std::map<PolMode, Rule>& rules() const { return rules_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  ModeMap() = default;
  void finalize();  // prunes zero amplitudes, validates isometry

  std::map<PolMode, Rule> rules_;
  std::vector<std::string> warnings_;
};

// Substitutes every creation operator by its image and re-expands; preserves
// inner products because the map is an isometry.
FockVector apply_mode_map(const ModeMap& map, const FockVector& v);

}  // namespace singlet6
