#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "singlet6/pipeline.hpp"

namespace singlet6::cli {

struct CommonOptions {
  double phi = std::numbers::pi;
  std::string split = "cascade";
  double noise = 0.0;
  std::uint64_t shots = 113;
  std::uint64_t seed = 1;
  std::string out_path;  // empty = stdout
  std::string format;    // empty = command default

  PipelineConfig pipeline_config() const;
};

// Substream ids: histogram/witness sampling uses kSettingStream + index so it
// never collides with bootstrap resample streams (1..resamples).
inline constexpr std::uint64_t kSettingStream = 1'000'000;

SplitAmplitudes parse_split(const std::string& text);

// key=value file with the PipelineConfig key set: phi, split, noise, shots,
// seed. Values act as defaults; command-line flags override them.
void apply_config_file(const std::string& path, CommonOptions& opts);

int cmd_pipeline(const CommonOptions& opts);
int cmd_histogram(const CommonOptions& opts, const std::string& setting,
                  const std::string& angles);
int cmd_project(const CommonOptions& opts, const std::string& mode,
                const std::string& bra, const std::string& basis);
int cmd_witness(const CommonOptions& opts, const std::vector<std::string>& counts_paths,
                const std::string& golden_path, int resamples);
int cmd_invariance(const CommonOptions& opts, int trials);

}  // namespace singlet6::cli
