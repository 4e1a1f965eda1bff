#pragma once

#include <span>
#include <vector>

#include "plcal/survey.hpp"

namespace plcal {

/// Free-space constant for distances in km and frequencies in GHz.
inline constexpr double kFsplConstantDb = 92.44;

struct Prediction {
    double distance_m = 0.0;
    double loss_db = 0.0; // path loss, >= 0 in normal regimes
    double rssi_db = 0.0; // erp_db - loss_db
};

/// Log-distance path loss: ref_loss + 10 * n * log10(d / ref_distance).
/// Distances inside the reference distance are extrapolated (loss below
/// ref_loss); callers that care should flag them.
double ldpl_loss(double distance_m, double exponent, const RadioConfig& radio);

/// Free-space path loss: 20 log10(d_km) + 20 log10(f_GHz) + 92.44, minus
/// both antenna gains. Distances are taken in meters and converted.
double fspl_loss(double distance_m, const RadioConfig& radio);

double path_loss(const PathLossModel& model, const RadioConfig& radio, double distance_m);

/// Predicted received strength: erp minus the model's path loss.
double predict_rssi(const PathLossModel& model, const RadioConfig& radio, double distance_m);

/// One Prediction per distance, in input order.
std::vector<Prediction> predict_table(const PathLossModel& model, const RadioConfig& radio,
                                      std::span<const double> distances_m);

/// Distance at which the predicted RSSI drops to min_rssi_db:
/// d = ref_distance * 10^((erp - ref_loss - min_rssi) / (10 n)).
/// Log-distance models only; throws ComputeError for the free-space variant
/// and for thresholds above the RSSI at the reference distance.
double coverage_distance(const PathLossModel& model, const RadioConfig& radio, double min_rssi_db);

} // namespace plcal
