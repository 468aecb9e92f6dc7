#include "singlet6/pipeline.hpp"

#include <cmath>
#include <stdexcept>

namespace singlet6 {

SplitAmplitudes SplitAmplitudes::symmetric() {
  const Complex s{1.0 / std::sqrt(3.0), 0};
  return {{s, s, s}, {s, s, s}};
}

SplitAmplitudes SplitAmplitudes::cascade() {
  const Complex t{1.0 / std::sqrt(2.0), 0};
  const Complex h{0.5, 0};
  return {{t, h, h}, {t, h, h}};
}

void PipelineConfig::validate() const {
  if (!std::isfinite(phi)) throw std::invalid_argument("phi must be finite");
  if (noise_p < 0.0 || noise_p > 1.0) {
    throw std::invalid_argument("noise fraction must be in [0, 1]");
  }
  for (const auto& arm : {split.arm_a, split.arm_b}) {
    double n2 = 0.0;
    for (const auto& a : arm) n2 += std::norm(a);
    if (std::abs(n2 - 1.0) > 1e-12) {
      throw std::invalid_argument("split amplitudes must be normalized");
    }
  }
}

ModeMap pipeline_mode_map(const SplitAmplitudes& split) {
  const ModeMap arm_a = ModeMap::three_way_split(
      Spatial::A0, {Spatial::A, Spatial::B, Spatial::C}, split.arm_a);
  const ModeMap arm_b = ModeMap::three_way_split(
      Spatial::B0, {Spatial::D, Spatial::E, Spatial::F}, split.arm_b);
  return ModeMap::merged(arm_a, arm_b);
}

PipelineResult run_pipeline(const PipelineConfig& config) {
  config.validate();
  const FockVector emission = pdc_state({.order = 3, .phi = config.phi});
  const FockVector distributed = apply_mode_map(pipeline_mode_map(config.split), emission);
  auto [state, probability] = postselect_one_per_mode(
      distributed, {kOutputModes.begin(), kOutputModes.end()});
  const QubitState target = named_state(StateName::Psi6Minus);
  const double fid = std::norm(overlap(target, state));
  return {std::move(state), probability, fid};
}

}  // namespace singlet6
