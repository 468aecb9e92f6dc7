#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "singlet6/io.hpp"
#include "singlet6/random.hpp"

namespace singlet6::cli {

namespace {

using nlohmann::json;

// Writes to --out or stdout; one trailing newline either way.
void emit(const CommonOptions& opts, const std::string& payload) {
  if (opts.out_path.empty()) {
    std::cout << payload;
    if (payload.empty() || payload.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + opts.out_path);
  out << payload;
  if (payload.empty() || payload.back() != '\n') out << '\n';
}

void print_warnings(const ModeMap& map) {
  for (const auto& w : map.warnings()) std::cerr << "warning: " << w << "\n";
}

json amplitude_list(const QubitState& state, const MeasurementSetting& labels) {
  json amps = json::array();
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const Complex a = state.amplitude(i);
    if (std::abs(a) < 1e-12) continue;
    amps.push_back({{"outcome", labels.outcome_label(i)},
                    {"re", a.real()},
                    {"im", a.imag()}});
  }
  return amps;
}

json split_json(const SplitAmplitudes& split) {
  const auto arm = [](const std::array<Complex, 3>& a) {
    json out = json::array();
    for (const auto& x : a) out.push_back({{"re", x.real()}, {"im", x.imag()}});
    return out;
  };
  return {{"arm_a0", arm(split.arm_a)}, {"arm_b0", arm(split.arm_b)}};
}

MeasurementSetting parse_setting(const std::string& setting, const std::string& angles,
                                 int n_qubits) {
  if (setting != "custom") {
    if (static_cast<int>(setting.size()) != n_qubits) {
      throw std::invalid_argument("setting needs one letter per qubit");
    }
    return MeasurementSetting::from_letters(setting);
  }
  // custom: per-qubit wave-plate pair "hwp:qwp,..." in degrees.
  std::vector<QubitBasis> bases;
  std::istringstream in(angles);
  std::string part;
  while (std::getline(in, part, ',')) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("custom setting parts must look like hwp:qwp");
    }
    const double h = std::stod(part.substr(0, colon)) * std::numbers::pi / 180.0;
    const double q = std::stod(part.substr(colon + 1)) * std::numbers::pi / 180.0;
    const JonesMatrix u = waveplate(WavePlate::Quarter, q) * waveplate(WavePlate::Half, h);
    bases.push_back(QubitBasis::custom(u));
  }
  if (static_cast<int>(bases.size()) != n_qubits) {
    throw std::invalid_argument("custom setting needs one hwp:qwp pair per qubit");
  }
  return MeasurementSetting(std::move(bases));
}

std::string histogram_csv(const MeasurementSetting& setting,
                          const std::vector<HistogramRow>& rows,
                          const std::vector<std::pair<std::string, std::string>>& meta) {
  std::ostringstream out;
  write_histogram_csv(out, setting, rows, meta);
  return out.str();
}

}  // namespace

PipelineConfig CommonOptions::pipeline_config() const {
  PipelineConfig config;
  config.phi = phi;
  config.split = parse_split(split);
  config.noise_p = noise;
  config.shots = shots;
  config.seed = seed;
  config.validate();
  return config;
}

void apply_config_file(const std::string& path, CommonOptions& opts) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto strip = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    if (strip(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               " is not key=value");
    }
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    if (key == "phi") {
      opts.phi = std::stod(value);
    } else if (key == "split") {
      opts.split = value;
    } else if (key == "noise") {
      opts.noise = std::stod(value);
    } else if (key == "shots") {
      opts.shots = std::stoull(value);
    } else if (key == "seed") {
      opts.seed = std::stoull(value);
    } else {
      throw std::runtime_error("unknown config key: " + key);
    }
  }
}

SplitAmplitudes parse_split(const std::string& text) {
  if (text == "sym" || text == "symmetric") return SplitAmplitudes::symmetric();
  if (text == "cascade") return SplitAmplitudes::cascade();

  const auto parse_arm = [](const std::string& part) {
    std::array<Complex, 3> amps;
    std::istringstream in(part);
    std::string value;
    int k = 0;
    while (std::getline(in, value, ',')) {
      if (k >= 3) throw std::invalid_argument("split arm needs exactly three amplitudes");
      amps[k++] = Complex{std::stod(value), 0.0};
    }
    if (k != 3) throw std::invalid_argument("split arm needs exactly three amplitudes");
    return amps;
  };

  const auto slash = text.find('/');
  SplitAmplitudes split;
  if (slash == std::string::npos) {
    split.arm_a = parse_arm(text);
    split.arm_b = split.arm_a;
  } else {
    split.arm_a = parse_arm(text.substr(0, slash));
    split.arm_b = parse_arm(text.substr(slash + 1));
  }
  return split;
}

int cmd_pipeline(const CommonOptions& opts) {
  const PipelineConfig config = opts.pipeline_config();
  print_warnings(pipeline_mode_map(config.split));
  const PipelineResult result = run_pipeline(config);
  const MeasurementSetting labels = MeasurementSetting::uniform(QubitBasis::z(), 6);

  if (opts.format == "csv") {
    std::ostringstream out;
    out << "# success_probability=" << format_double(result.success_probability) << "\n";
    out << "# fidelity=" << format_double(result.fidelity_to_target) << "\n";
    out << "outcome_label,re,im\n";
    for (std::size_t i = 0; i < result.state.dim(); ++i) {
      const Complex a = result.state.amplitude(i);
      if (std::abs(a) < 1e-12) continue;
      out << labels.outcome_label(i) << ',' << format_double(a.real()) << ','
          << format_double(a.imag()) << "\n";
    }
    emit(opts, out.str());
    return 0;
  }

  json j;
  j["phi"] = config.phi;
  j["split"] = split_json(config.split);
  j["success_probability"] = result.success_probability;
  j["fidelity"] = result.fidelity_to_target;
  j["amplitudes"] = amplitude_list(result.state, labels);
  emit(opts, j.dump(2));
  return 0;
}

int cmd_histogram(const CommonOptions& opts, const std::string& setting_text,
                  const std::string& angles) {
  const PipelineConfig config = opts.pipeline_config();
  const MeasurementSetting setting = parse_setting(setting_text, angles, 6);
  print_warnings(pipeline_mode_map(config.split));
  const PipelineResult result = run_pipeline(config);

  OutcomeDistribution dist =
      config.noise_p > 0.0
          ? outcome_distribution(add_white_noise(result.state, config.noise_p), setting)
          : outcome_distribution(result.state, setting);

  std::unique_ptr<CountsTable> counts;
  CorrelationEstimate estimate;
  if (config.shots > 0) {
    Rng rng(config.seed, kSettingStream);
    counts = std::make_unique<CountsTable>(sample_counts(dist, config.shots, setting, rng));
    counts->seed = config.seed;
    estimate = estimate_correlation(*counts);
  } else {
    estimate.value = correlation(dist);
    estimate.std_error = 0.0;
    estimate.n_events = 0;
    estimate.degenerate = true;
  }

  const std::vector<HistogramRow> rows = histogram_rows(dist, setting, counts.get());

  if (opts.format == "json") {
    json j;
    j["setting"] = setting.letters();
    j["shots"] = config.shots;
    j["seed"] = config.seed;
    j["noise"] = config.noise_p;
    j["correlation"] = json::parse(correlation_report_json(estimate, setting.letters()));
    json bins = json::array();
    for (const auto& row : rows) {
      bins.push_back({{"outcome", row.label},
                      {"probability", row.probability},
                      {"count", row.count},
                      {"stderr", row.std_error}});
    }
    j["bins"] = bins;
    emit(opts, j.dump(2));
    return 0;
  }

  std::vector<std::pair<std::string, std::string>> meta;
  meta.emplace_back("shots", std::to_string(config.shots));
  meta.emplace_back("seed", std::to_string(config.seed));
  meta.emplace_back("noise", format_double(config.noise_p));
  meta.emplace_back("correlation", format_double(estimate.value));
  meta.emplace_back("stderr", format_double(estimate.std_error));
  emit(opts, histogram_csv(setting, rows, meta));
  return 0;
}

int cmd_project(const CommonOptions& opts, const std::string& mode_text,
                const std::string& bra_text, const std::string& basis_text) {
  const PipelineConfig config = opts.pipeline_config();
  const auto mode = parse_spatial(mode_text);
  if (!mode) throw std::invalid_argument("unknown mode label: " + mode_text);
  if (bra_text.size() != 1) throw std::invalid_argument("bra must be one letter");
  const char bra = bra_text[0];
  if (basis_text != "HV" && basis_text != "DA") {
    throw std::invalid_argument("report basis must be HV or DA");
  }

  print_warnings(pipeline_mode_map(config.split));
  const PipelineResult result = run_pipeline(config);
  int position = -1;
  for (std::size_t q = 0; q < result.state.modes().size(); ++q) {
    if (result.state.modes()[q] == *mode) position = static_cast<int>(q);
  }
  if (position < 0) throw std::invalid_argument("mode is not part of the register");

  const ProjectionResult projected =
      project_qubit(result.state, position, polarization_ket(bra));

  double fidelity_value = -1.0;
  bool has_reference = false;
  try {
    const QubitState reference = conditional_reference(*mode, bra);
    fidelity_value = std::norm(overlap(reference, projected.state));
    has_reference = true;
  } catch (const std::invalid_argument&) {
    // No closed form for this mode/outcome; report without a fidelity.
  }

  const MeasurementSetting report_setting = MeasurementSetting::uniform(
      basis_text == "DA" ? QubitBasis::x() : QubitBasis::z(), projected.state.n_qubits());
  const OutcomeDistribution dist = outcome_distribution(projected.state, report_setting);
  const std::vector<HistogramRow> rows = histogram_rows(dist, report_setting, nullptr);

  if (opts.format == "csv") {
    std::vector<std::pair<std::string, std::string>> meta;
    meta.emplace_back("mode", std::string(to_string(*mode)));
    meta.emplace_back("bra", std::string(1, bra));
    meta.emplace_back("basis", basis_text);
    meta.emplace_back("probability", format_double(projected.probability));
    if (has_reference) meta.emplace_back("fidelity", format_double(fidelity_value));
    emit(opts, histogram_csv(report_setting, rows, meta));
    return 0;
  }

  json j;
  j["mode"] = std::string(to_string(*mode));
  j["bra"] = std::string(1, bra);
  j["basis"] = basis_text;
  j["probability"] = projected.probability;
  if (has_reference) {
    j["fidelity"] = fidelity_value;
  } else {
    j["fidelity"] = nullptr;
  }
  // Amplitudes reported in the requested basis.
  const QubitState display =
      basis_text == "DA"
          ? local_unitary(projected.state, QubitBasis::x().analyzer)
          : projected.state;
  j["amplitudes"] = amplitude_list(display, report_setting);
  json bins = json::array();
  for (const auto& row : rows) {
    bins.push_back({{"outcome", row.label}, {"probability", row.probability}});
  }
  j["histogram"] = bins;
  emit(opts, j.dump(2));
  return 0;
}

int cmd_witness(const CommonOptions& opts, const std::vector<std::string>& counts_paths,
                const std::string& golden_path, int resamples) {
  const PipelineConfig config = opts.pipeline_config();
  const QubitState target = named_state(StateName::Psi6Minus);
  const WitnessOperator w_max = witness_max_overlap(target, 2.0 / 3.0);
  const WitnessOperator w_red = reduce_witness(w_max);

  print_warnings(pipeline_mode_map(config.split));
  const PipelineResult result = run_pipeline(config);

  json j;
  j["target"] = "psi6-";
  j["overlap_bound"] = 2.0 / 3.0;

  double max_expect, red_expect;
  if (config.noise_p > 0.0) {
    const DensityOperator rho = add_white_noise(result.state, config.noise_p);
    max_expect = w_max.expectation(rho);
    red_expect = w_red.expectation(rho);
  } else {
    max_expect = w_max.expectation(result.state);
    red_expect = w_red.expectation(result.state);
  }

  j["max_overlap"] = {{"expectation_on_state", max_expect},
                      {"noise_tolerance", noise_tolerance(w_max, target)}};
  const double constant = w_red.form.coefficient(std::string(6, 'I'));
  Matrix guarantee = w_red.dense;
  Matrix scaled = w_max.dense;
  scaled *= Complex{w_red.detection_scale, 0};
  guarantee -= scaled;
  j["reduced"] = {{"expectation_on_state", red_expect},
                  {"noise_tolerance", noise_tolerance(w_red, target)},
                  {"constant", constant},
                  {"n_terms", w_red.form.terms().size()},
                  {"detection_scale", w_red.detection_scale},
                  {"psd_margin", min_eigenvalue(guarantee)}};

  // Term-by-term diff against the reference coefficient table.
  try {
    const auto reference = load_witness_terms(golden_path);
    const WitnessTermDiff diff = diff_witness_terms(w_red, reference);
    json mism = json::array();
    for (const auto& m : diff.mismatches) {
      mism.push_back({{"word", m.word}, {"reference", m.reference}, {"derived", m.derived}});
    }
    j["golden_diff"] = {{"path", golden_path},
                        {"matches", diff.matches},
                        {"mismatches", mism},
                        {"only_in_reference", diff.only_in_reference},
                        {"only_in_derived", diff.only_in_derived}};
  } catch (const std::exception& e) {
    j["golden_diff"] = {{"path", golden_path}, {"error", e.what()}};
    std::cerr << "warning: " << e.what() << "\n";
  }

  // Estimated expectation: from provided counts files, or from a seeded
  // simulation when shots are configured.
  const BootstrapConfig bootstrap{resamples, config.seed, 1.0};
  std::unique_ptr<WitnessReport> report;
  if (!counts_paths.empty()) {
    if (counts_paths.size() != 3) {
      throw std::invalid_argument("witness estimation needs three counts files (x, y, z)");
    }
    std::vector<CountsTable> tables;
    for (const auto& path : counts_paths) {
      std::ifstream in(path);
      if (!in) throw std::runtime_error("cannot open counts file: " + path);
      tables.push_back(read_counts_csv(in));
    }
    report = std::make_unique<WitnessReport>(witness_expectation_from_counts(
        w_red, tables[0], tables[1], tables[2], bootstrap));
  } else if (config.shots > 0) {
    const QubitBasis bases[3] = {QubitBasis::x(), QubitBasis::y(), QubitBasis::z()};
    std::vector<CountsTable> tables;
    for (int i = 0; i < 3; ++i) {
      const MeasurementSetting setting = MeasurementSetting::uniform(bases[i], 6);
      const OutcomeDistribution dist =
          config.noise_p > 0.0
              ? outcome_distribution(add_white_noise(result.state, config.noise_p), setting)
              : outcome_distribution(result.state, setting);
      Rng rng(config.seed, kSettingStream + i);
      tables.push_back(sample_counts(dist, config.shots, setting, rng));
    }
    report = std::make_unique<WitnessReport>(witness_expectation_from_counts(
        w_red, tables[0], tables[1], tables[2], bootstrap));
  }
  if (report) {
    j["estimate"] = json::parse(witness_report_json(*report));
  } else {
    j["estimate"] = nullptr;
  }

  emit(opts, j.dump(2));
  return 0;
}

int cmd_invariance(const CommonOptions& opts, int trials) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  const PipelineConfig config = opts.pipeline_config();
  print_warnings(pipeline_mode_map(config.split));
  const PipelineResult result = run_pipeline(config);

  const MeasurementSetting z_setting = MeasurementSetting::uniform(QubitBasis::z(), 6);
  double max_overlap_dev = 0.0;
  double max_bin_dev = 0.0;

  if (config.noise_p > 0.0) {
    const DensityOperator rho = add_white_noise(result.state, config.noise_p);
    const OutcomeDistribution base = outcome_distribution(rho, z_setting);
    for (int t = 0; t < trials; ++t) {
      Rng rng(config.seed, static_cast<std::uint64_t>(t));
      const Mat2 u = haar_su2(rng);
      const DensityOperator rotated = local_unitary(rho, u);
      max_overlap_dev = std::max(max_overlap_dev, (rotated.matrix() - rho.matrix()).max_abs());
      const OutcomeDistribution dist =
          outcome_distribution(rho, MeasurementSetting::uniform(QubitBasis::custom(u), 6));
      for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        max_bin_dev = std::max(max_bin_dev, std::abs(dist.probs[i] - base.probs[i]));
      }
    }
  } else {
    const OutcomeDistribution base = outcome_distribution(result.state, z_setting);
    for (int t = 0; t < trials; ++t) {
      Rng rng(config.seed, static_cast<std::uint64_t>(t));
      const Mat2 u = haar_su2(rng);
      const QubitState rotated = local_unitary(result.state, u);
      max_overlap_dev = std::max(
          max_overlap_dev, std::abs(std::abs(overlap(result.state, rotated)) - 1.0));
      const OutcomeDistribution dist = outcome_distribution(
          result.state, MeasurementSetting::uniform(QubitBasis::custom(u), 6));
      for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        max_bin_dev = std::max(max_bin_dev, std::abs(dist.probs[i] - base.probs[i]));
      }
    }
  }

  json j;
  j["trials"] = trials;
  j["seed"] = config.seed;
  j["noise"] = config.noise_p;
  j["max_overlap_deviation"] = max_overlap_dev;
  j["max_bin_deviation"] = max_bin_dev;
  j["pass"] = max_overlap_dev < 1e-10 && max_bin_dev < 1e-10;
  emit(opts, j.dump(2));
  return 0;
}

}  // namespace singlet6::cli
