#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "plcal/survey.hpp"

namespace plcal {

struct LabeledValue {
    std::string label;
    double value_db = 0.0;
};

struct ErrorRow {
    std::string label;
    double reference_db = 0.0;
    double estimate_db = 0.0;
    double relative_error = 0.0; // fraction, >= 0
};

struct ErrorTable {
    std::vector<ErrorRow> rows;
    double mean_relative_error = 0.0;
    double max_relative_error = 0.0;

    /// Rows with relative_error strictly below the threshold.
    std::size_t count_below(double threshold) const;
};

struct ThresholdReport {
    std::size_t count = 0;           // rows strictly above the threshold
    std::vector<std::string> labels; // their labels, in row order
};

/// |reference - estimate| / |reference|. Throws on a zero reference.
double relative_error(double reference_db, double estimate_db);

/// One row per reference, in reference order; estimates are matched by
/// label and must cover every reference label.
ErrorTable error_table(std::span<const LabeledValue> references,
                       std::span<const LabeledValue> estimates);

/// References are the campaign's per-point means.
ErrorTable error_table(const SurveyCampaign& campaign, std::span<const LabeledValue> estimates);

ThresholdReport threshold_report(const ErrorTable& table, double threshold);

/// Integer percent with halves rounded away from zero (0.105 -> 11).
int percent(double fraction);

} // namespace plcal
