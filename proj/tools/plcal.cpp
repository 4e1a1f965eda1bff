#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plcal/errors.hpp"
#include "plcal/numformat.hpp"
#include "plcal/propagation.hpp"
#include "plcal/report.hpp"

namespace {

using namespace plcal;

// "3,4,5,6" -> {3,4,5,6}; the empty string means no model columns.
std::vector<double> parse_exponent_list(const std::string& text)
{
    std::vector<double> exponents;
    std::size_t start = 0;
    if (text.empty())
        return exponents;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string item =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        double value{};
        const auto result = std::from_chars(item.data(), item.data() + item.size(), value);
        if (result.ec != std::errc{} || result.ptr != item.data() + item.size() || !(value > 0.0))
            throw CLI::ValidationError("--exponents", "'" + item + "' is not a positive number");
        exponents.push_back(value);
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return exponents;
}

FitMethod parse_mode(const std::string& mode)
{
    if (mode == "discrete")
        return FitMethod::DiscreteSelection;
    if (mode == "continuous")
        return FitMethod::LeastSquares;
    return FitMethod::GridSearch;
}

int run_predict(const std::string& campaign_path, const std::string& config_path,
                const std::string& exponents_text, const std::string& out_path)
{
    const SurveyCampaign campaign = load_campaign(config_path, campaign_path);
    const std::vector<double> exponents = parse_exponent_list(exponents_text);
    const std::string csv = prediction_table_csv(make_prediction_table(campaign, exponents));
    std::cout << csv;
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out || !(out << csv))
            throw std::runtime_error("cannot write: " + out_path);
    }
    return 0;
}

int run_fit(const std::string& campaign_path, const std::string& config_path,
            const std::string& mode, const std::string& exponents_text, double grid_lo,
            double grid_hi, double grid_step)
{
    const SurveyCampaign campaign = load_campaign(config_path, campaign_path);
    FitResult fit;
    switch (parse_mode(mode)) {
    case FitMethod::DiscreteSelection:
        fit = select_best_exponent(campaign, parse_exponent_list(exponents_text));
        break;
    case FitMethod::LeastSquares:
        fit = fit_exponent_least_squares(campaign);
        break;
    case FitMethod::GridSearch:
        fit = fit_exponent_grid(campaign, grid_lo, grid_hi, grid_step);
        break;
    }
    std::cout << format_fit_summary(fit, classify_environment(fit.exponent));
    return 0;
}

int run_report(const std::string& campaign_path, const std::string& config_path,
               const std::string& out_dir, const std::string& exponents_text,
               std::optional<double> forced_exponent, const std::string& mode, double threshold)
{
    const SurveyCampaign campaign = load_campaign(config_path, campaign_path);
    ReportOptions options;
    options.table_exponents = parse_exponent_list(exponents_text);
    options.forced_exponent = forced_exponent;
    options.fit_mode = parse_mode(mode);
    options.threshold = threshold;
    const ReportBundle bundle = build_report(campaign, options);
    write_report(bundle, campaign, out_dir);
    std::cout << "report written to " << out_dir << "\n";
    return 0;
}

int run_coverage(const std::string& config_path, double exponent, double min_rssi)
{
    const RadioConfig radio = load_radio_config(config_path);
    const double distance = coverage_distance(LogDistance{exponent}, radio, min_rssi);
    std::cout << format_db(distance) << " m\n";
    return 0;
}

int run_validate(const std::string& campaign_path, const std::string& config_path)
{
    const SurveyCampaign campaign = load_campaign(config_path, campaign_path);
    std::cout << "campaign: " << campaign.name << "\n"
              << "points: " << campaign.points.size() << "\n"
              << "runs_per_point: " << campaign.runs_per_point() << "\n"
              << "distance_m: " << format_shortest(campaign.points.front().distance_m) << " .. "
              << format_shortest(campaign.points.back().distance_m) << "\n"
              << "ok\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Path-loss survey calibration toolkit"};
    app.require_subcommand(1);

    std::string campaign_path;
    std::string config_path;
    std::string exponents_text = "3,4,5,6";
    std::string out_path;
    std::string mode = "discrete";
    double threshold = 0.15;
    double exponent = 0.0;
    double min_rssi = 0.0;
    double grid_lo = 0.5;
    double grid_hi = 10.0;
    double grid_step = 1e-3;
    bool exponent_given = false;

    const auto mode_check = CLI::IsMember({"discrete", "continuous", "grid"});

    auto* predict = app.add_subcommand("predict", "Measured means and model predictions per point");
    predict->add_option("--campaign", campaign_path, "Campaign CSV file")->required();
    predict->add_option("--config", config_path, "Radio config JSON file")->required();
    predict->add_option("--exponents", exponents_text,
                        "Comma-separated model exponents ('' for means only)");
    predict->add_option("--out", out_path, "Also write the table to this file");

    auto* fit = app.add_subcommand("fit", "Calibrate the propagation exponent");
    fit->add_option("--campaign", campaign_path, "Campaign CSV file")->required();
    fit->add_option("--config", config_path, "Radio config JSON file")->required();
    fit->add_option("--mode", mode, "Fit mode")->check(mode_check);
    fit->add_option("--exponents", exponents_text, "Candidates for discrete mode");
    fit->add_option("--grid-lo", grid_lo, "Grid mode lower bound");
    fit->add_option("--grid-hi", grid_hi, "Grid mode upper bound");
    fit->add_option("--grid-step", grid_step, "Grid mode step");

    auto* report = app.add_subcommand("report", "Write the full analysis bundle to a directory");
    report->add_option("--campaign", campaign_path, "Campaign CSV file")->required();
    report->add_option("--config", config_path, "Radio config JSON file")->required();
    report->add_option("--out", out_path, "Output directory")->required();
    report->add_option("--exponents", exponents_text, "Prediction table columns");
    report->add_option("--exponent", exponent, "Force this exponent instead of fitting")
        ->check(CLI::PositiveNumber);
    report->add_option("--mode", mode, "Fit mode")->check(mode_check);
    report->add_option("--threshold", threshold, "Relative-error flag level (fraction)")
        ->check(CLI::Range(1e-9, 1.0 - 1e-9));

    auto* coverage = app.add_subcommand("coverage", "Maximum distance meeting an RSSI threshold");
    coverage->add_option("--config", config_path, "Radio config JSON file")->required();
    coverage->add_option("--exponent", exponent, "Propagation exponent")
        ->required()
        ->check(CLI::PositiveNumber);
    coverage->add_option("--min-rssi", min_rssi, "Receiver threshold in dB")->required();

    auto* validate = app.add_subcommand("validate", "Ingest and check a campaign");
    validate->add_option("--campaign", campaign_path, "Campaign CSV file")->required();
    validate->add_option("--config", config_path, "Radio config JSON file")->required();

    try {
        app.parse(argc, argv);
        exponent_given = report->count("--exponent") > 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (predict->parsed())
            return run_predict(campaign_path, config_path, exponents_text, out_path);
        if (fit->parsed())
            return run_fit(campaign_path, config_path, mode, exponents_text, grid_lo, grid_hi,
                           grid_step);
        if (report->parsed())
            return run_report(campaign_path, config_path, out_path, exponents_text,
                              exponent_given ? std::optional<double>(exponent) : std::nullopt,
                              mode, threshold);
        if (coverage->parsed())
            return run_coverage(config_path, exponent, min_rssi);
        if (validate->parsed())
            return run_validate(campaign_path, config_path);
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ComputeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
