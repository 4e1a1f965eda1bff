#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "plcal/survey.hpp"

namespace plcal {

struct FittedPoint {
    std::string label; // empty when fitted from bare (distance, value) pairs
    double distance_m = 0.0;
    double fitted_db = 0.0;
};

/// Ordinary least squares of value on log10(distance):
/// y = intercept + slope * log10(d).
struct RegressionResult {
    double intercept_db = 0.0;
    double slope_db_per_decade = 0.0;
    double r_squared = 0.0;
    std::vector<FittedPoint> fitted;
};

/// Fit (distance, value) pairs. Needs at least two points at distinct
/// distances; throws ComputeError otherwise.
RegressionResult log_regression(std::span<const std::pair<double, double>> points);

/// Fit a campaign's per-point means, carrying point labels through.
RegressionResult log_regression(const SurveyCampaign& campaign);

double regression_predict(const RegressionResult& reg, double distance_m);

} // namespace plcal
