#pragma once

#include <array>
#include <cstdint>
#include <numbers>

#include "singlet6/optics.hpp"
#include "singlet6/pdc.hpp"
#include "singlet6/postselect.hpp"

namespace singlet6 {

// Analyzer modes in qubit order: arm a0 feeds a, b, c; arm b0 feeds d, e, f.
inline constexpr std::array<Spatial, 6> kOutputModes = {
    Spatial::A, Spatial::B, Spatial::C, Spatial::D, Spatial::E, Spatial::F};

struct SplitAmplitudes {
  std::array<Complex, 3> arm_a;
  std::array<Complex, 3> arm_b;

  // Both arms split evenly, 1/sqrt(3) each.
  static SplitAmplitudes symmetric();
  // Two balanced beam splitters in a row per arm: (1/sqrt2, 1/2, 1/2).
  static SplitAmplitudes cascade();
};

struct PipelineConfig {
  double phi = std::numbers::pi;
  SplitAmplitudes split = SplitAmplitudes::cascade();
  double noise_p = 0.0;          // white-noise admixture used by sampling runs
  std::uint64_t shots = 113;     // events per measurement setting
  std::uint64_t seed = 1;

  void validate() const;  // throws std::invalid_argument
};

struct PipelineResult {
  QubitState state;
  double success_probability;
  double fidelity_to_target;  // |<Psi6-|state>|^2
};

// The full ideal pipeline: third-order emission, three-way split per arm,
// one-photon-per-mode selection.
ModeMap pipeline_mode_map(const SplitAmplitudes& split);
PipelineResult run_pipeline(const PipelineConfig& config);

}  // namespace singlet6
