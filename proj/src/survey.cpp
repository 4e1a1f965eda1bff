#include "plcal/survey.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "plcal/errors.hpp"
#include "plcal/numformat.hpp"

namespace plcal {

namespace {

constexpr std::string_view kDataHeader = "point,distance_m,run,rssi_db";

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

[[noreturn]] void row_error(std::size_t line_no, const std::string& what)
{
    throw DataError("data row " + std::to_string(line_no) + ": " + what);
}

double parse_row_double(std::string_view field, std::size_t line_no, const char* what)
{
    double value{};
    const auto result = std::from_chars(field.data(), field.data() + field.size(), value);
    if (result.ec != std::errc{} || result.ptr != field.data() + field.size())
        row_error(line_no, std::string("malformed ") + what + " '" + std::string(field) + "'");
    return value;
}

int parse_row_run(std::string_view field, std::size_t line_no)
{
    int run{};
    const auto result = std::from_chars(field.data(), field.data() + field.size(), run);
    if (result.ec != std::errc{} || result.ptr != field.data() + field.size())
        row_error(line_no, "malformed run index '" + std::string(field) + "'");
    if (run < 1)
        row_error(line_no, "run index must be >= 1");
    return run;
}

double require_number(const nlohmann::json& config, const char* key)
{
    const auto it = config.find(key);
    if (it == config.end())
        throw DataError(std::string("config: missing key '") + key + "'");
    if (!it->is_number())
        throw DataError(std::string("config: '") + key + "' must be a number");
    return it->get<double>();
}

double optional_number(const nlohmann::json& config, const char* key, double fallback)
{
    const auto it = config.find(key);
    if (it == config.end())
        return fallback;
    if (!it->is_number())
        throw DataError(std::string("config: '") + key + "' must be a number");
    return it->get<double>();
}

nlohmann::json parse_config_json(const std::string& config_text)
{
    auto parsed = nlohmann::json::parse(config_text, nullptr, /*allow_exceptions=*/false);
    if (parsed.is_discarded())
        throw DataError("config: invalid JSON");
    if (!parsed.is_object())
        throw DataError("config: expected a JSON object");
    return parsed;
}

RadioConfig radio_from_json(const nlohmann::json& config)
{
    RadioConfig radio;
    radio.erp_db = require_number(config, "erp_db");
    radio.ref_loss_db = require_number(config, "ref_loss_db");
    radio.frequency_ghz = require_number(config, "frequency_ghz");
    radio.ref_distance_m = optional_number(config, "ref_distance_m", 1.0);
    radio.tx_gain_dbi = optional_number(config, "tx_gain_dbi", 0.0);
    radio.rx_gain_dbi = optional_number(config, "rx_gain_dbi", 0.0);
    radio.validate();
    return radio;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError("file not found: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        throw DataError("cannot read: " + path);
    return buffer.str();
}

} // namespace

void RadioConfig::validate() const
{
    const struct {
        const char* name;
        double value;
    } fields[] = {
        {"erp_db", erp_db},           {"ref_loss_db", ref_loss_db},
        {"ref_distance_m", ref_distance_m}, {"frequency_ghz", frequency_ghz},
        {"tx_gain_dbi", tx_gain_dbi}, {"rx_gain_dbi", rx_gain_dbi},
    };
    for (const auto& field : fields) {
        if (!std::isfinite(field.value))
            throw DataError(std::string("config: '") + field.name + "' must be finite");
    }
    if (!(ref_distance_m > 0.0))
        throw DataError("config: 'ref_distance_m' must be > 0");
    if (!(frequency_ghz > 0.0))
        throw DataError("config: 'frequency_ghz' must be > 0");
}

double point_mean(const MeasurementPoint& point)
{
    if (point.samples_db.empty())
        throw std::invalid_argument("point_mean: point '" + point.label + "' has no samples");
    double sum = 0.0;
    for (const double sample : point.samples_db)
        sum += sample;
    return sum / static_cast<double>(point.samples_db.size());
}

std::size_t SurveyCampaign::runs_per_point() const
{
    return points.empty() ? 0 : points.front().samples_db.size();
}

std::vector<double> SurveyCampaign::distances() const
{
    std::vector<double> out;
    out.reserve(points.size());
    for (const auto& point : points)
        out.push_back(point.distance_m);
    return out;
}

std::vector<double> SurveyCampaign::means() const
{
    std::vector<double> out;
    out.reserve(points.size());
    for (const auto& point : points)
        out.push_back(point_mean(point));
    return out;
}

const MeasurementPoint* SurveyCampaign::find(std::string_view label) const
{
    for (const auto& point : points) {
        if (point.label == label)
            return &point;
    }
    return nullptr;
}

RadioConfig parse_radio_config(const std::string& config_text)
{
    return radio_from_json(parse_config_json(config_text));
}

SurveyCampaign ingest_campaign(const std::string& config_text, const std::string& data_text)
{
    const auto config = parse_config_json(config_text);

    SurveyCampaign campaign;
    campaign.radio = radio_from_json(config);
    campaign.name = "campaign";
    if (const auto it = config.find("name"); it != config.end()) {
        if (!it->is_string())
            throw DataError("config: 'name' must be a string");
        campaign.name = it->get<std::string>();
    }

    struct PointAccum {
        double distance_m = 0.0;
        std::map<int, double> run_samples;
    };
    std::map<std::string, PointAccum> accum;

    std::istringstream lines(data_text);
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(lines, line)) {
        ++line_no;
        const std::string_view stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#')
            continue;
        if (!header_seen) {
            const auto fields = split_fields(stripped);
            if (fields != split_fields(kDataHeader))
                throw DataError("data row " + std::to_string(line_no) +
                                ": missing or malformed header; expected '" +
                                std::string(kDataHeader) + "'");
            header_seen = true;
            continue;
        }

        const auto fields = split_fields(stripped);
        if (fields.size() != 4)
            row_error(line_no, "expected 4 fields, got " + std::to_string(fields.size()));
        if (fields[0].empty())
            row_error(line_no, "empty point label");

        const std::string label(fields[0]);
        const double distance = parse_row_double(fields[1], line_no, "distance_m");
        const int run = parse_row_run(fields[2], line_no);
        const double rssi = parse_row_double(fields[3], line_no, "rssi_db");

        if (!std::isfinite(distance) || !(distance > 0.0))
            row_error(line_no, "distance_m must be finite and > 0");
        if (!std::isfinite(rssi))
            row_error(line_no, "non-finite rssi_db");
        if (rssi > 0.0)
            row_error(line_no, "rssi_db must be <= 0");

        auto [it, inserted] = accum.try_emplace(label, PointAccum{distance, {}});
        if (!inserted && it->second.distance_m != distance)
            row_error(line_no, "conflicting distance for '" + label + "' (" +
                                   format_shortest(it->second.distance_m) + " vs " +
                                   format_shortest(distance) + ")");
        if (!it->second.run_samples.emplace(run, rssi).second)
            row_error(line_no, "duplicate sample for ('" + label + "', run " +
                                   std::to_string(run) + ")");
    }

    if (!header_seen || accum.empty())
        throw DataError("no measurement points");

    const std::size_t run_count = accum.begin()->second.run_samples.size();
    for (const auto& [label, point] : accum) {
        if (point.run_samples.size() != run_count)
            throw DataError("non-uniform run count: '" + accum.begin()->first + "' has " +
                            std::to_string(run_count) + " runs, '" + label + "' has " +
                            std::to_string(point.run_samples.size()));
    }

    campaign.points.reserve(accum.size());
    for (const auto& [label, point] : accum) {
        MeasurementPoint out;
        out.label = label;
        out.distance_m = point.distance_m;
        out.samples_db.reserve(point.run_samples.size());
        for (const auto& [run, rssi] : point.run_samples)
            out.samples_db.push_back(rssi);
        campaign.points.push_back(std::move(out));
    }
    std::stable_sort(campaign.points.begin(), campaign.points.end(),
                     [](const MeasurementPoint& a, const MeasurementPoint& b) {
                         return a.distance_m < b.distance_m;
                     });
    return campaign;
}

RadioConfig load_radio_config(const std::string& config_path)
{
    return parse_radio_config(read_file(config_path));
}

SurveyCampaign load_campaign(const std::string& config_path, const std::string& data_path)
{
    return ingest_campaign(read_file(config_path), read_file(data_path));
}

std::string campaign_to_csv(const SurveyCampaign& campaign)
{
    std::string out{kDataHeader};
    out += '\n';
    for (const auto& point : campaign.points) {
        for (std::size_t run = 0; run < point.samples_db.size(); ++run) {
            out += point.label;
            out += ',';
            out += format_shortest(point.distance_m);
            out += ',';
            out += std::to_string(run + 1);
            out += ',';
            out += format_shortest(point.samples_db[run]);
            out += '\n';
        }
    }
    return out;
}

std::string radio_config_to_json(const RadioConfig& radio, const std::string& name)
{
    nlohmann::json out{
        {"name", name},
        {"erp_db", radio.erp_db},
        {"ref_loss_db", radio.ref_loss_db},
        {"ref_distance_m", radio.ref_distance_m},
        {"frequency_ghz", radio.frequency_ghz},
        {"tx_gain_dbi", radio.tx_gain_dbi},
        {"rx_gain_dbi", radio.rx_gain_dbi},
    };
    return out.dump(2) + "\n";
}

} // namespace plcal
