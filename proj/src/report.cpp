#include "plcal/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include "plcal/errors.hpp"
#include "plcal/numformat.hpp"
#include "plcal/propagation.hpp"

namespace plcal {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0)
            out += sep;
        out += parts[i];
    }
    return out;
}

std::string format_classes(std::span<const EnvironmentClass> classes)
{
    if (classes.empty())
        return "none";
    std::vector<std::string> parts;
    parts.reserve(classes.size());
    for (const auto& env : classes) {
        parts.push_back(std::string(env.name) + " (" + format_shortest(env.n_low) + " to " +
                        format_shortest(env.n_high) + ")");
    }
    return join(parts, "; ");
}

std::vector<LabeledValue> model_estimates(const SurveyCampaign& campaign, double exponent)
{
    const PathLossModel model = LogDistance{exponent};
    std::vector<LabeledValue> estimates;
    estimates.reserve(campaign.points.size());
    for (const auto& point : campaign.points)
        estimates.push_back({point.label, predict_rssi(model, campaign.radio, point.distance_m)});
    return estimates;
}

void write_text_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write: " + path.string());
    out << content;
    if (!out)
        throw std::runtime_error("write failed: " + path.string());
}

std::string series_csv(std::span<const double> distances, std::span<const double> values)
{
    std::string out = "distance_m,rssi_db\n";
    for (std::size_t i = 0; i < distances.size(); ++i) {
        out += format_shortest(distances[i]);
        out += ',';
        out += format_db(values[i]);
        out += '\n';
    }
    return out;
}

} // namespace

PredictionTable make_prediction_table(const SurveyCampaign& campaign,
                                      std::span<const double> exponents)
{
    PredictionTable table;
    table.exponents.assign(exponents.begin(), exponents.end());
    table.rows.reserve(campaign.points.size());
    for (const auto& point : campaign.points) {
        PredictionTable::Row row;
        row.label = point.label;
        row.distance_m = point.distance_m;
        row.mean_db = point_mean(point);
        row.model_db.reserve(exponents.size());
        for (const double exponent : exponents) {
            row.model_db.push_back(
                predict_rssi(LogDistance{exponent}, campaign.radio, point.distance_m));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string prediction_table_csv(const PredictionTable& table)
{
    std::string out = "point,distance_m,mean_db";
    for (const double exponent : table.exponents) {
        out += ",ldpl";
        out += format_shortest(exponent);
        out += "_db";
    }
    out += '\n';
    for (const auto& row : table.rows) {
        out += row.label;
        out += ',';
        out += format_shortest(row.distance_m);
        out += ',';
        out += format_db(row.mean_db);
        for (const double value : row.model_db) {
            out += ',';
            out += format_db(value);
        }
        out += '\n';
    }
    return out;
}

std::string format_exponent(double exponent, FitMethod method)
{
    if (method == FitMethod::DiscreteSelection)
        return format_shortest(exponent);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", exponent);
    return buf;
}

std::string format_fit_summary(const FitResult& fit, std::span<const EnvironmentClass> classes)
{
    std::string out;
    out += "method = ";
    out += to_string(fit.method);
    out += "\nn = " + format_exponent(fit.exponent, fit.method);
    out += "\nrmse_db = " + format_db(fit.rmse_db);
    out += "\nmae_db = " + format_db(fit.mae_db);
    out += "\nmean_relative_error_pct = " + std::to_string(percent(fit.mean_relative_error));
    out += "\nenvironment_classes = " + format_classes(classes);
    out += '\n';
    return out;
}

ReportBundle build_report(const SurveyCampaign& campaign, const ReportOptions& options)
{
    ReportBundle bundle;
    bundle.threshold = options.threshold;
    bundle.prediction_table = make_prediction_table(campaign, options.table_exponents);

    if (options.forced_exponent) {
        const double forced[] = {*options.forced_exponent};
        bundle.fit = select_best_exponent(campaign, forced);
    } else {
        switch (options.fit_mode) {
        case FitMethod::DiscreteSelection:
            bundle.fit = select_best_exponent(campaign, options.table_exponents);
            break;
        case FitMethod::LeastSquares:
            bundle.fit = fit_exponent_least_squares(campaign);
            break;
        case FitMethod::GridSearch:
            bundle.fit = fit_exponent_grid(campaign, 0.5, 10.0, 1e-3);
            break;
        }
    }
    bundle.classes = classify_environment(bundle.fit.exponent);

    const std::vector<LabeledValue> estimates = model_estimates(campaign, bundle.fit.exponent);
    bundle.real_vs_model = error_table(campaign, estimates);
    bundle.exceeding = threshold_report(bundle.real_vs_model, options.threshold);

    try {
        bundle.regression = log_regression(campaign);
        std::vector<LabeledValue> fitted;
        fitted.reserve(bundle.regression->fitted.size());
        for (const auto& point : bundle.regression->fitted)
            fitted.push_back({point.label, point.fitted_db});
        bundle.regression_vs_model = error_table(fitted, estimates);
    } catch (const ComputeError& e) {
        bundle.regression.reset();
        bundle.regression_skip_reason = e.what();
    }

    for (const auto& point : campaign.points) {
        if (point.distance_m < campaign.radio.ref_distance_m) {
            bundle.warnings.push_back(point.label + ": distance " +
                                      format_shortest(point.distance_m) +
                                      " m is inside the reference distance (" +
                                      format_shortest(campaign.radio.ref_distance_m) +
                                      " m); prediction extrapolated");
        }
    }
    return bundle;
}

namespace {

std::string error_table_csv(const ErrorTable& table)
{
    std::string out = "point,reference_db,estimate_db,relative_error_pct\n";
    for (const auto& row : table.rows) {
        out += row.label;
        out += ',';
        out += format_db(row.reference_db);
        out += ',';
        out += format_db(row.estimate_db);
        out += ',';
        out += std::to_string(percent(row.relative_error));
        out += '\n';
    }
    return out;
}

std::string report_text(const ReportBundle& bundle, const SurveyCampaign& campaign,
                        const std::vector<std::string>& file_names)
{
    const std::string model_name =
        "ldpl" + format_exponent(bundle.fit.exponent, bundle.fit.method);

    std::string out{kToolVersion};
    out += "\ncampaign: " + campaign.name;
    out += "\npoints: " + std::to_string(campaign.points.size());
    out += "\nruns_per_point: " + std::to_string(campaign.runs_per_point());
    if (!campaign.points.empty()) {
        out += "\ndistance_m: " + format_shortest(campaign.points.front().distance_m) + " .. " +
               format_shortest(campaign.points.back().distance_m);
    }
    out += "\n\n[fit]\n";
    out += format_fit_summary(bundle.fit, bundle.classes);

    out += "\n[regression]\n";
    if (bundle.regression) {
        out += "model = rssi_db = a + b*log10(distance_m)\n";
        out += "a_db = " + format_db(bundle.regression->intercept_db) + "\n";
        out += "b_db_per_decade = " + format_db(bundle.regression->slope_db_per_decade) + "\n";
        char r2[32];
        std::snprintf(r2, sizeof r2, "%.2f", bundle.regression->r_squared);
        out += std::string("r_squared = ") + r2 + "\n";
    } else {
        out += "skipped: " + bundle.regression_skip_reason + "\n";
    }

    out += "\n[relative_errors] real vs " + model_name + "\n";
    out += "mean_pct = " + std::to_string(percent(bundle.real_vs_model.mean_relative_error)) + "\n";
    out += "max_pct = " + std::to_string(percent(bundle.real_vs_model.max_relative_error)) + "\n";
    out += "threshold_pct = " + format_shortest(bundle.threshold * 100.0) + "\n";
    out += "exceeding = ";
    out += bundle.exceeding.labels.empty() ? "none" : join(bundle.exceeding.labels, ", ");
    out += "\n";

    if (!bundle.warnings.empty()) {
        out += "\n[warnings]\n";
        for (const auto& warning : bundle.warnings)
            out += warning + "\n";
    }

    out += "\n[files]\n";
    for (const auto& name : file_names)
        out += name + "\n";
    return out;
}

} // namespace

void write_report(const ReportBundle& bundle, const SurveyCampaign& campaign,
                  const std::filesystem::path& out_dir)
{
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw std::runtime_error("cannot create output directory: " + out_dir.string());

    std::vector<std::string> file_names;
    std::vector<std::pair<std::string, std::string>> files; // name -> content

    files.emplace_back("predictions.csv", prediction_table_csv(bundle.prediction_table));

    files.emplace_back("errors_real_vs_ldpl.csv", error_table_csv(bundle.real_vs_model));
    if (bundle.regression_vs_model)
        files.emplace_back("errors_regression_vs_ldpl.csv",
                           error_table_csv(*bundle.regression_vs_model));

    const std::vector<double> distances = campaign.distances();
    files.emplace_back("series_measured.csv", series_csv(distances, campaign.means()));
    for (std::size_t i = 0; i < bundle.prediction_table.exponents.size(); ++i) {
        std::vector<double> values;
        values.reserve(bundle.prediction_table.rows.size());
        for (const auto& row : bundle.prediction_table.rows)
            values.push_back(row.model_db[i]);
        files.emplace_back(
            "series_ldpl" + format_shortest(bundle.prediction_table.exponents[i]) + ".csv",
            series_csv(distances, values));
    }
    if (bundle.regression) {
        std::vector<double> values;
        values.reserve(bundle.regression->fitted.size());
        for (const auto& point : bundle.regression->fitted)
            values.push_back(point.fitted_db);
        files.emplace_back("series_regression.csv", series_csv(distances, values));
    }

    file_names.reserve(files.size() + 1);
    for (const auto& [name, content] : files)
        file_names.push_back(name);

    for (const auto& [name, content] : files)
        write_text_file(out_dir / name, content);
    write_text_file(out_dir / "report.txt", report_text(bundle, campaign, file_names));
}

} // namespace plcal
