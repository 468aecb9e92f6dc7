#include "singlet6/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace singlet6 {

std::string format_double(double value) {
  if (value == 0.0) value = 0.0;  // normalize -0
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::vector<HistogramRow> histogram_rows(const OutcomeDistribution& d,
                                         const MeasurementSetting& setting,
                                         const CountsTable* counts) {
  std::vector<HistogramRow> rows(d.probs.size());
  for (std::size_t i = 0; i < d.probs.size(); ++i) {
    rows[i].label = setting.outcome_label(i);
    rows[i].probability = d.probs[i];
    if (counts != nullptr && counts->total > 0) {
      rows[i].count = counts->counts[i];
      const double f = static_cast<double>(counts->counts[i]) /
                       static_cast<double>(counts->total);
      rows[i].std_error = std::sqrt(f * (1.0 - f) / static_cast<double>(counts->total));
    }
  }
  return rows;
}

void write_histogram_csv(std::ostream& out, const MeasurementSetting& setting,
                         const std::vector<HistogramRow>& rows,
                         const std::vector<std::pair<std::string, std::string>>& meta) {
  out << "# setting=" << setting.letters() << "\n";
  for (const auto& [key, value] : meta) out << "# " << key << "=" << value << "\n";
  out << "outcome_label,probability,count,stderr\n";
  for (const auto& row : rows) {
    out << row.label << ',' << format_double(row.probability) << ',' << row.count
        << ',' << format_double(row.std_error) << "\n";
  }
}

CountsTable read_counts_csv(std::istream& in) {
  std::string line;
  std::string setting_letters;
  std::vector<std::pair<std::string, std::uint64_t>> entries;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq != std::string::npos) {
        std::string key = line.substr(1, eq - 1);
        key.erase(0, key.find_first_not_of(' '));
        key.erase(key.find_last_not_of(' ') + 1);
        if (key == "setting") setting_letters = line.substr(eq + 1);
      }
      continue;
    }
    if (!header_seen) {  // column header row
      header_seen = true;
      continue;
    }
    std::istringstream ls(line);
    std::string label, prob, count;
    if (!std::getline(ls, label, ',') || !std::getline(ls, prob, ',') ||
        !std::getline(ls, count, ',')) {
      throw std::runtime_error("malformed counts CSV row: " + line);
    }
    try {
      entries.emplace_back(label, std::stoull(count));
    } catch (const std::exception&) {
      throw std::runtime_error("malformed count value in CSV row: " + line);
    }
  }
  if (setting_letters.empty()) {
    throw std::runtime_error("counts CSV is missing the '# setting=' line");
  }
  const MeasurementSetting setting = MeasurementSetting::from_letters(setting_letters);
  CountsTable table{std::vector<std::uint64_t>(std::size_t{1} << setting.n_qubits(), 0),
                    0, setting, {}};
  for (const auto& [label, count] : entries) {
    const auto index = setting.parse_label(label);
    if (!index) throw std::runtime_error("outcome label does not match setting: " + label);
    table.counts[*index] += count;
    table.total += count;
  }
  return table;
}

std::string witness_report_json(const WitnessReport& report) {
  nlohmann::json j;
  j["expectation"] = report.expectation;
  j["stderr"] = report.std_error;
  j["n_settings"] = report.n_settings;
  j["verdict"] = report.verdict == WitnessVerdict::EntanglementDetected
                     ? "entanglement_detected"
                     : "inconclusive";
  j["resamples"] = report.resamples;
  j["seed"] = report.seed;
  return j.dump();
}

std::string correlation_report_json(const CorrelationEstimate& estimate,
                                    const std::string& setting_letters) {
  nlohmann::json j;
  j["setting"] = setting_letters;
  j["correlation"] = estimate.value;
  j["stderr"] = estimate.std_error;
  j["n_events"] = estimate.n_events;
  j["degenerate"] = estimate.degenerate;
  return j.dump();
}

}  // namespace singlet6
