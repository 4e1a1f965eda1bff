#include "plcal/calibration.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "plcal/errors.hpp"
#include "plcal/numformat.hpp"
#include "plcal/propagation.hpp"

namespace plcal {

namespace {

constexpr std::array<EnvironmentClass, 6> kEnvironmentClasses{{
    {"Free space", 2.0, 2.0},
    {"Cellular radio in urban area", 2.7, 3.5},
    {"Cellular radio in urban area with fading", 3.0, 5.0},
    {"Closed environment with line of sight", 1.6, 1.8},
    {"Building with obstacles", 4.0, 6.0},
    {"Factory with obstacles", 2.0, 3.0},
}};

FitResult evaluate_fit(const SurveyCampaign& campaign, double exponent, FitMethod method)
{
    FitResult fit;
    fit.exponent = exponent;
    fit.method = method;
    fit.residuals.reserve(campaign.points.size());

    const PathLossModel model = LogDistance{exponent};
    double sum_abs = 0.0;
    double sum_sq = 0.0;
    double sum_rel = 0.0;
    std::size_t rel_count = 0;
    for (const auto& point : campaign.points) {
        const double measured = point_mean(point);
        const double predicted = predict_rssi(model, campaign.radio, point.distance_m);
        const double residual = measured - predicted;
        fit.residuals.push_back({point.label, measured, predicted, residual});
        sum_abs += std::fabs(residual);
        sum_sq += residual * residual;
        if (measured != 0.0) {
            sum_rel += std::fabs(residual) / std::fabs(measured);
            ++rel_count;
        }
    }
    const auto count = static_cast<double>(fit.residuals.size());
    fit.mae_db = sum_abs / count;
    fit.rmse_db = std::sqrt(sum_sq / count);
    fit.mean_relative_error = rel_count > 0 ? sum_rel / static_cast<double>(rel_count) : 0.0;
    return fit;
}

// log10(d_i / d0) and per-point means, shared by the fitting routines.
struct FitInputs {
    std::vector<double> log_distances;
    std::vector<double> means;
};

FitInputs fit_inputs(const SurveyCampaign& campaign)
{
    FitInputs inputs;
    inputs.log_distances.reserve(campaign.points.size());
    inputs.means.reserve(campaign.points.size());
    for (const auto& point : campaign.points) {
        inputs.log_distances.push_back(std::log10(point.distance_m / campaign.radio.ref_distance_m));
        inputs.means.push_back(point_mean(point));
    }
    return inputs;
}

std::size_t distinct_distance_count(const SurveyCampaign& campaign)
{
    std::vector<double> distances = campaign.distances();
    std::sort(distances.begin(), distances.end());
    return static_cast<std::size_t>(std::unique(distances.begin(), distances.end()) -
                                    distances.begin());
}

} // namespace

std::string_view to_string(FitMethod method)
{
    switch (method) {
    case FitMethod::DiscreteSelection: return "discrete";
    case FitMethod::LeastSquares: return "least_squares";
    case FitMethod::GridSearch: return "grid";
    }
    return "unknown";
}

std::span<const EnvironmentClass> environment_classes()
{
    return kEnvironmentClasses;
}

std::vector<EnvironmentClass> classify_environment(double exponent)
{
    if (!(exponent > 0.0) || !std::isfinite(exponent))
        throw std::invalid_argument("classify_environment: exponent must be finite and > 0");
    std::vector<EnvironmentClass> matches;
    for (const auto& env : kEnvironmentClasses) {
        if (exponent >= env.n_low && exponent <= env.n_high)
            matches.push_back(env);
    }
    return matches;
}

FitResult select_best_exponent(const SurveyCampaign& campaign, std::span<const double> candidates)
{
    if (candidates.empty())
        throw std::invalid_argument("select_best_exponent: no candidate exponents");
    if (campaign.points.empty())
        throw std::invalid_argument("select_best_exponent: campaign has no points");
    for (const double candidate : candidates) {
        if (!(candidate > 0.0) || !std::isfinite(candidate))
            throw std::invalid_argument("select_best_exponent: candidates must be finite and > 0");
    }

    FitResult best;
    bool have_best = false;
    for (const double candidate : candidates) {
        FitResult fit = evaluate_fit(campaign, candidate, FitMethod::DiscreteSelection);
        if (!have_best || fit.rmse_db < best.rmse_db ||
            (fit.rmse_db == best.rmse_db && fit.exponent < best.exponent)) {
            best = std::move(fit);
            have_best = true;
        }
    }
    return best;
}

FitResult fit_exponent_least_squares(const SurveyCampaign& campaign)
{
    if (campaign.points.size() < 2 || distinct_distance_count(campaign) < 2)
        throw ComputeError(
            "fit_exponent_least_squares: degenerate geometry (need >= 2 distinct distances)");

    const FitInputs inputs = fit_inputs(campaign);
    const double base = campaign.radio.erp_db - campaign.radio.ref_loss_db;
    double sum_xx = 0.0;
    double sum_xc = 0.0;
    for (std::size_t i = 0; i < inputs.means.size(); ++i) {
        const double x = inputs.log_distances[i];
        sum_xx += x * x;
        sum_xc += x * (base - inputs.means[i]);
    }
    if (sum_xx == 0.0)
        throw ComputeError(
            "fit_exponent_least_squares: degenerate geometry (no slope information; all points "
            "at the reference distance)");

    const double exponent = sum_xc / (10.0 * sum_xx);
    if (!(exponent > 0.0))
        throw ComputeError("fit_exponent_least_squares: fitted exponent " +
                           format_shortest(exponent) +
                           " is not positive; measurements do not decay with distance");
    return evaluate_fit(campaign, exponent, FitMethod::LeastSquares);
}

FitResult fit_exponent_grid(const SurveyCampaign& campaign, double lo, double hi, double step)
{
    if (!(lo > 0.0) || !(hi >= lo) || !(step > 0.0))
        throw std::invalid_argument("fit_exponent_grid: require 0 < lo <= hi and step > 0");
    if (campaign.points.empty())
        throw std::invalid_argument("fit_exponent_grid: campaign has no points");

    const FitInputs inputs = fit_inputs(campaign);
    const double base = campaign.radio.erp_db - campaign.radio.ref_loss_db;

    const auto steps = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
    double best_exponent = lo;
    double best_sse = std::numeric_limits<double>::infinity();
    for (long k = 0; k <= steps; ++k) {
        const double exponent = lo + static_cast<double>(k) * step;
        double sse = 0.0;
        for (std::size_t i = 0; i < inputs.means.size(); ++i) {
            const double residual = inputs.means[i] - (base - 10.0 * exponent * inputs.log_distances[i]);
            sse += residual * residual;
        }
        if (sse < best_sse) { // ties keep the earlier, smaller exponent
            best_sse = sse;
            best_exponent = exponent;
        }
    }
    return evaluate_fit(campaign, best_exponent, FitMethod::GridSearch);
}

} // namespace plcal
