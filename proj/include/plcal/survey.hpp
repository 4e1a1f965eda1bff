#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace plcal {

/// Transmitter-side parameters of a survey. Defaults match a 2.4 GHz access
/// point radiating 20 dB with 20 dB of loss at the 1 m reference distance.
/// Every power and loss figure lives on one consistent dB scale.
struct RadioConfig {
    double erp_db = 20.0;        // effective radiated power
    double ref_loss_db = 20.0;   // path loss at ref_distance_m
    double ref_distance_m = 1.0;
    double frequency_ghz = 2.4;
    double tx_gain_dbi = 0.0;
    double rx_gain_dbi = 0.0;

    void validate() const; // throws DataError on non-finite or out-of-range fields
};

/// One surveyed location: a distance from the transmitter and the RSSI
/// reading of each test run, in run order.
struct MeasurementPoint {
    std::string label;
    double distance_m = 0.0;
    std::vector<double> samples_db;
};

/// Arithmetic mean of a point's per-run readings.
double point_mean(const MeasurementPoint& point);

/// A validated measurement campaign. Points are sorted by ascending
/// distance, labels are unique, and every point has the same run count.
/// Immutable by convention once built; safe to share across threads.
struct SurveyCampaign {
    std::string name;
    RadioConfig radio;
    std::vector<MeasurementPoint> points;

    std::size_t runs_per_point() const;
    std::vector<double> distances() const;
    std::vector<double> means() const;
    const MeasurementPoint* find(std::string_view label) const;
};

struct FreeSpace {};
struct LogDistance {
    double exponent = 0.0;
};

/// Model selector: free-space loss or log-distance loss with a propagation
/// exponent.
using PathLossModel = std::variant<FreeSpace, LogDistance>;

/// Parse a radio config from JSON text. Required keys: erp_db, ref_loss_db,
/// frequency_ghz. Optional: ref_distance_m (1.0), tx_gain_dbi and
/// rx_gain_dbi (0.0), name (used as the campaign name).
RadioConfig parse_radio_config(const std::string& config_text);

/// Build a validated campaign from config JSON and measurement CSV text.
/// The CSV carries the mandatory header `point,distance_m,run,rssi_db` and
/// one row per (point, run) sample; rows may appear in any order.
/// Throws DataError with the offending row number on malformed input, and
/// on duplicate (point, run) pairs, non-uniform run counts, non-positive
/// distances, or non-finite/positive RSSI values.
SurveyCampaign ingest_campaign(const std::string& config_text, const std::string& data_text);

/// File-path convenience wrappers around the text parsers.
RadioConfig load_radio_config(const std::string& config_path);
SurveyCampaign load_campaign(const std::string& config_path, const std::string& data_path);

/// Canonical CSV form of a campaign; ingest_campaign inverts it exactly.
std::string campaign_to_csv(const SurveyCampaign& campaign);

/// Config JSON matching parse_radio_config's schema.
std::string radio_config_to_json(const RadioConfig& radio, const std::string& name);

} // namespace plcal
