#include <doctest.h>

#include <cmath>
#include <sstream>

#include "singlet6/io.hpp"
#include "singlet6/pipeline.hpp"

#include <json.hpp>

using namespace singlet6;

TEST_SUITE("pipeline_io") {

TEST_CASE("default pipeline summary") {
  const PipelineResult result = run_pipeline(PipelineConfig{});
  CHECK(result.fidelity_to_target == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(result.success_probability - 9.0 / 256.0) < 1e-12);
}

TEST_CASE("a zero phase spoils the singlet fidelity") {
  PipelineConfig config;
  config.phi = 0.0;
  const PipelineResult result = run_pipeline(config);
  CHECK(result.fidelity_to_target < 0.999);
  CHECK(result.success_probability > 0.0);
}

TEST_CASE("config validation") {
  PipelineConfig config;
  config.noise_p = 1.5;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config.noise_p = 0.0;
  config.split.arm_a = {Complex{1, 0}, Complex{1, 0}, Complex{0, 0}};
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}

TEST_CASE("histogram CSV round-trips through the counts reader") {
  const QubitState psi = run_pipeline(PipelineConfig{}).state;
  const MeasurementSetting setting = MeasurementSetting::uniform(QubitBasis::x(), 6);
  const OutcomeDistribution dist = outcome_distribution(psi, setting);
  const CountsTable counts = sample_counts(dist, 113, setting, std::uint64_t{42});

  std::ostringstream out;
  write_histogram_csv(out, setting, histogram_rows(dist, setting, &counts),
                      {{"seed", "42"}});
  const std::string text = out.str();
  CHECK(text.find("# setting=xxxxxx") != std::string::npos);
  CHECK(text.find("outcome_label,probability,count,stderr") != std::string::npos);
  CHECK(text.find("DDDDDD") != std::string::npos);  // diagonal-basis labels

  std::istringstream in(text);
  const CountsTable back = read_counts_csv(in);
  CHECK(back.total == counts.total);
  CHECK(back.counts == counts.counts);
  CHECK(back.setting.letters() == "xxxxxx");
}

TEST_CASE("counts reader rejects broken input") {
  std::istringstream missing_setting("outcome_label,probability,count,stderr\nHHHHHH,1,3,0\n");
  CHECK_THROWS_AS(read_counts_csv(missing_setting), std::runtime_error);

  std::istringstream bad_label(
      "# setting=zzzzzz\noutcome_label,probability,count,stderr\nHHHHHQ,1,3,0\n");
  CHECK_THROWS_AS(read_counts_csv(bad_label), std::runtime_error);
}

TEST_CASE("json reports are well-formed and deterministic") {
  WitnessReport report;
  report.expectation = -0.0421;
  report.std_error = 0.0123;
  report.verdict = WitnessVerdict::EntanglementDetected;
  report.resamples = 2000;
  report.seed = 7;
  const std::string a = witness_report_json(report);
  const std::string b = witness_report_json(report);
  CHECK(a == b);
  const auto parsed = nlohmann::json::parse(a);
  CHECK(parsed["verdict"] == "entanglement_detected");
  CHECK(parsed["n_settings"] == 3);

  CorrelationEstimate est{-0.879, 0.0449, 113, false};
  const auto correlation = nlohmann::json::parse(correlation_report_json(est, "zzzzzz"));
  CHECK(correlation["setting"] == "zzzzzz");
  CHECK(correlation["n_events"] == 113);
}

TEST_CASE("sampled runs with one seed are byte-identical") {
  const QubitState psi = run_pipeline(PipelineConfig{}).state;
  const MeasurementSetting setting = MeasurementSetting::uniform(QubitBasis::z(), 6);
  const OutcomeDistribution dist = outcome_distribution(psi, setting);

  const auto render = [&] {
    const CountsTable counts = sample_counts(dist, 113, setting, std::uint64_t{9});
    std::ostringstream out;
    write_histogram_csv(out, setting, histogram_rows(dist, setting, &counts), {});
    return out.str();
  };
  CHECK(render() == render());
}

}  // TEST_SUITE
