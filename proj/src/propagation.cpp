#include "plcal/propagation.hpp"

#include <cmath>
#include <stdexcept>

#include "plcal/errors.hpp"
#include "plcal/numformat.hpp"

namespace plcal {

double ldpl_loss(double distance_m, double exponent, const RadioConfig& radio)
{
    if (!(distance_m > 0.0))
        throw std::invalid_argument("ldpl_loss: distance must be > 0");
    if (!(exponent > 0.0) || !std::isfinite(exponent))
        throw std::invalid_argument("ldpl_loss: exponent must be finite and > 0");
    if (!(radio.ref_distance_m > 0.0))
        throw std::invalid_argument("ldpl_loss: reference distance must be > 0");
    return radio.ref_loss_db + 10.0 * exponent * std::log10(distance_m / radio.ref_distance_m);
}

double fspl_loss(double distance_m, const RadioConfig& radio)
{
    if (!(distance_m > 0.0))
        throw std::invalid_argument("fspl_loss: distance must be > 0");
    if (!(radio.frequency_ghz > 0.0))
        throw std::invalid_argument("fspl_loss: frequency must be > 0");
    const double distance_km = distance_m / 1000.0;
    return 20.0 * std::log10(distance_km) + 20.0 * std::log10(radio.frequency_ghz) +
           kFsplConstantDb - radio.tx_gain_dbi - radio.rx_gain_dbi;
}

double path_loss(const PathLossModel& model, const RadioConfig& radio, double distance_m)
{
    return std::visit(
        [&](const auto& variant) {
            using T = std::decay_t<decltype(variant)>;
            if constexpr (std::is_same_v<T, FreeSpace>)
                return fspl_loss(distance_m, radio);
            else
                return ldpl_loss(distance_m, variant.exponent, radio);
        },
        model);
}

double predict_rssi(const PathLossModel& model, const RadioConfig& radio, double distance_m)
{
    return radio.erp_db - path_loss(model, radio, distance_m);
}

std::vector<Prediction> predict_table(const PathLossModel& model, const RadioConfig& radio,
                                      std::span<const double> distances_m)
{
    std::vector<Prediction> out;
    out.reserve(distances_m.size());
    for (const double distance : distances_m) {
        const double loss = path_loss(model, radio, distance);
        out.push_back({distance, loss, radio.erp_db - loss});
    }
    return out;
}

double coverage_distance(const PathLossModel& model, const RadioConfig& radio, double min_rssi_db)
{
    const auto* log_distance = std::get_if<LogDistance>(&model);
    if (log_distance == nullptr)
        throw ComputeError("coverage_distance: free-space model is not invertible in this toolkit");
    if (!(log_distance->exponent > 0.0) || !std::isfinite(log_distance->exponent))
        throw std::invalid_argument("coverage_distance: exponent must be finite and > 0");

    const double rssi_at_ref = radio.erp_db - radio.ref_loss_db;
    if (min_rssi_db > rssi_at_ref)
        throw ComputeError("coverage_distance: threshold " + format_db(min_rssi_db) +
                           " dB exceeds the " + format_db(rssi_at_ref) +
                           " dB available at the reference distance");
    return radio.ref_distance_m *
           std::pow(10.0, (rssi_at_ref - min_rssi_db) / (10.0 * log_distance->exponent));
}

} // namespace plcal
