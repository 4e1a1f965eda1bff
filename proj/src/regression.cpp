#include "plcal/regression.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "plcal/errors.hpp"

namespace plcal {

namespace {

RegressionResult fit_core(std::vector<FittedPoint> points, std::span<const double> values)
{
    if (points.size() < 2)
        throw ComputeError("log_regression: need at least 2 points");

    std::vector<double> xs;
    xs.reserve(points.size());
    for (const auto& point : points) {
        if (!(point.distance_m > 0.0))
            throw std::invalid_argument("log_regression: distances must be > 0");
        xs.push_back(std::log10(point.distance_m));
    }

    const auto count = static_cast<double>(points.size());
    double x_mean = 0.0;
    double y_mean = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        x_mean += xs[i];
        y_mean += values[i];
    }
    x_mean /= count;
    y_mean /= count;

    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        sxx += (xs[i] - x_mean) * (xs[i] - x_mean);
        sxy += (xs[i] - x_mean) * (values[i] - y_mean);
    }
    if (sxx == 0.0)
        throw ComputeError("log_regression: degenerate input (all distances equal)");

    RegressionResult reg;
    reg.slope_db_per_decade = sxy / sxx;
    reg.intercept_db = y_mean - reg.slope_db_per_decade * x_mean;

    double ss_res = 0.0;
    double ss_tot = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        points[i].fitted_db = reg.intercept_db + reg.slope_db_per_decade * xs[i];
        ss_res += (values[i] - points[i].fitted_db) * (values[i] - points[i].fitted_db);
        ss_tot += (values[i] - y_mean) * (values[i] - y_mean);
    }
    reg.r_squared = ss_tot > 0.0 ? std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0) : 1.0;
    reg.fitted = std::move(points);
    return reg;
}

} // namespace

RegressionResult log_regression(std::span<const std::pair<double, double>> points)
{
    std::vector<FittedPoint> fitted;
    std::vector<double> values;
    fitted.reserve(points.size());
    values.reserve(points.size());
    for (const auto& [distance, value] : points) {
        fitted.push_back({std::string{}, distance, 0.0});
        values.push_back(value);
    }
    return fit_core(std::move(fitted), values);
}

RegressionResult log_regression(const SurveyCampaign& campaign)
{
    std::vector<FittedPoint> fitted;
    std::vector<double> values;
    fitted.reserve(campaign.points.size());
    values.reserve(campaign.points.size());
    for (const auto& point : campaign.points) {
        fitted.push_back({point.label, point.distance_m, 0.0});
        values.push_back(point_mean(point));
    }
    return fit_core(std::move(fitted), values);
}

double regression_predict(const RegressionResult& reg, double distance_m)
{
    if (!(distance_m > 0.0))
        throw std::invalid_argument("regression_predict: distance must be > 0");
    return reg.intercept_db + reg.slope_db_per_decade * std::log10(distance_m);
}

} // namespace plcal
