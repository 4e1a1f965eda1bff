#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plcal/calibration.hpp"
#include "plcal/metrics.hpp"
#include "plcal/regression.hpp"

namespace plcal {

inline constexpr std::string_view kToolVersion = "plcal 0.1.0";

/// Per-point measured mean plus one model column per exponent.
struct PredictionTable {
    std::vector<double> exponents;
    struct Row {
        std::string label;
        double distance_m = 0.0;
        double mean_db = 0.0;
        std::vector<double> model_db; // one per exponent, same order
    };
    std::vector<Row> rows;
};

PredictionTable make_prediction_table(const SurveyCampaign& campaign,
                                      std::span<const double> exponents);

/// CSV with header `point,distance_m,mean_db,ldpl<n>_db,...`; dB values to
/// two decimals.
std::string prediction_table_csv(const PredictionTable& table);

struct ReportOptions {
    std::vector<double> table_exponents = {3, 4, 5, 6}; // prediction columns;
                                                        // discrete candidates
    std::optional<double> forced_exponent; // bypass fitting with this n
    FitMethod fit_mode = FitMethod::DiscreteSelection;
    double threshold = 0.15; // relative-error flag level
};

struct ReportBundle {
    PredictionTable prediction_table;
    FitResult fit; // the exponent behind both error tables
    std::vector<EnvironmentClass> classes;
    std::optional<RegressionResult> regression;
    std::string regression_skip_reason; // set when regression is absent
    ErrorTable real_vs_model;
    std::optional<ErrorTable> regression_vs_model;
    ThresholdReport exceeding; // real_vs_model rows above the threshold
    double threshold = 0.15;
    std::vector<std::string> warnings; // e.g. points inside the reference distance
};

ReportBundle build_report(const SurveyCampaign& campaign, const ReportOptions& options = {});

/// Write the bundle as a directory of CSV series plus a human-readable
/// report.txt. Output is deterministic: identical inputs give byte-identical
/// directories.
void write_report(const ReportBundle& bundle, const SurveyCampaign& campaign,
                  const std::filesystem::path& out_dir);

/// "4" for discrete picks, three decimals for continuous fits ("3.899").
std::string format_exponent(double exponent, FitMethod method);

/// The key = value block shared by `fit` output and report.txt.
std::string format_fit_summary(const FitResult& fit, std::span<const EnvironmentClass> classes);

} // namespace plcal
