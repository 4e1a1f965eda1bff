#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plcal/survey.hpp"

namespace plcal {

enum class FitMethod { DiscreteSelection, LeastSquares, GridSearch };

std::string_view to_string(FitMethod method);

struct Residual {
    std::string label;
    double measured_db = 0.0;  // per-point mean
    double predicted_db = 0.0;
    double residual_db = 0.0;  // measured - predicted
};

struct FitResult {
    double exponent = 0.0;
    FitMethod method = FitMethod::DiscreteSelection;
    std::vector<Residual> residuals;
    double mae_db = 0.0;
    double rmse_db = 0.0;
    double mean_relative_error = 0.0; // fraction
};

/// Named exponent range for a propagation environment.
struct EnvironmentClass {
    std::string_view name;
    double n_low = 0.0;
    double n_high = 0.0;
};

/// The built-in exponent taxonomy, from free space (2) up to buildings with
/// obstacles (4 to 6).
std::span<const EnvironmentClass> environment_classes();

/// All built-in classes whose inclusive [n_low, n_high] range contains the
/// exponent; possibly empty.
std::vector<EnvironmentClass> classify_environment(double exponent);

/// Evaluate each candidate exponent against the campaign's per-point means
/// and return the fit with minimal RMSE. Ties go to the smaller exponent.
FitResult select_best_exponent(const SurveyCampaign& campaign, std::span<const double> candidates);

/// Closed-form least squares over the log-distance model's single free
/// parameter: n* = sum(x_i * (erp - ref_loss - m_i)) / (10 * sum(x_i^2))
/// with x_i = log10(d_i / ref_distance). Throws ComputeError when the
/// geometry is degenerate (fewer than two distinct distances, or no slope
/// information) or the fitted exponent is not positive.
FitResult fit_exponent_least_squares(const SurveyCampaign& campaign);

/// Brute-force search over {lo, lo+step, ..., hi}. Deterministic: ties go
/// to the smaller exponent. Serves as the independent check on the
/// closed-form fit.
FitResult fit_exponent_grid(const SurveyCampaign& campaign, double lo, double hi, double step);

} // namespace plcal
