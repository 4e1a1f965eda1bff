#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <span>
#include <sstream>
#include <string>

#include "plcal/propagation.hpp"
#include "plcal/survey.hpp"

namespace testutil {

inline std::string fixture_path(const char* name)
{
    return std::string(PLCAL_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline plcal::SurveyCampaign load_fixture()
{
    return plcal::load_campaign(fixture_path("engine_room_radio.json"),
                                fixture_path("engine_room.csv"));
}

/// Campaign whose samples follow the log-distance model with the given
/// exponent, optionally perturbed by zero-mean Gaussian noise.
inline plcal::SurveyCampaign make_synthetic(const plcal::RadioConfig& radio,
                                            std::span<const double> distances, double exponent,
                                            int runs = 1, double noise_sigma = 0.0,
                                            std::mt19937* rng = nullptr)
{
    plcal::SurveyCampaign campaign;
    campaign.name = "synthetic";
    campaign.radio = radio;
    std::normal_distribution<double> noise(0.0, noise_sigma > 0.0 ? noise_sigma : 1.0);
    int index = 0;
    for (const double distance : distances) {
        plcal::MeasurementPoint point;
        point.label = "S" + std::to_string(++index);
        point.distance_m = distance;
        const double predicted =
            plcal::predict_rssi(plcal::LogDistance{exponent}, radio, distance);
        for (int run = 0; run < runs; ++run) {
            double sample = predicted;
            if (noise_sigma > 0.0 && rng != nullptr)
                sample += noise(*rng);
            point.samples_db.push_back(sample);
        }
        campaign.points.push_back(std::move(point));
    }
    std::sort(campaign.points.begin(), campaign.points.end(),
              [](const auto& a, const auto& b) { return a.distance_m < b.distance_m; });
    return campaign;
}

/// Unique directory under the system temp root, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag)
    {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("plcal_" + tag + "_" + std::to_string(::getpid()) + "_" +
                 std::to_string(++counter));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

} // namespace testutil
