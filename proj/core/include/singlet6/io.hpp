#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "singlet6/counting.hpp"
#include "singlet6/witness.hpp"

namespace singlet6 {

// Histogram CSV schema: comment lines "# key=value" (setting, shots, seed,
// correlation, stderr), then a header row and one row per outcome with
// columns outcome_label,probability,count,stderr.
struct HistogramRow {
  std::string label;
  double probability = 0.0;
  std::uint64_t count = 0;
  double std_error = 0.0;
};

std::vector<HistogramRow> histogram_rows(const OutcomeDistribution& d,
                                         const MeasurementSetting& setting,
                                         const CountsTable* counts = nullptr);

void write_histogram_csv(std::ostream& out, const MeasurementSetting& setting,
                         const std::vector<HistogramRow>& rows,
                         const std::vector<std::pair<std::string, std::string>>& meta = {});

// Reads a histogram CSV back into a counts table; the "# setting=" comment
// fixes the basis and outcome labels.
CountsTable read_counts_csv(std::istream& in);

std::string witness_report_json(const WitnessReport& report);
std::string correlation_report_json(const CorrelationEstimate& estimate,
                                    const std::string& setting_letters);

// Fixed-precision float formatting shared by all emitters, so equal runs
// produce byte-identical files.
std::string format_double(double value);

}  // namespace singlet6
