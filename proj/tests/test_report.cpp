#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <map>
#include <set>

#include "plcal/errors.hpp"
#include "plcal/numformat.hpp"
#include "plcal/report.hpp"

#include "fixture_values.hpp"
#include "testutil.hpp"

using namespace plcal;

namespace {

std::map<std::string, std::string> read_dir(const std::filesystem::path& dir)
{
    std::map<std::string, std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        files[entry.path().filename().string()] = testutil::read_file(entry.path().string());
    return files;
}

SurveyCampaign single_point_campaign()
{
    SurveyCampaign campaign;
    campaign.name = "single";
    campaign.points.push_back({"P1", 10.0, {-50.0, -52.0}});
    return campaign;
}

} // namespace

TEST_CASE("number formatting")
{
    CHECK(format_db(-45.2) == "-45.20");
    CHECK(format_db(-33.796) == "-33.80");
    CHECK(format_db(0.0) == "0.00");
    CHECK(format_db(-0.0001) == "0.00"); // no negative zero
    CHECK(format_shortest(7.0) == "7");
    CHECK(format_shortest(2.4) == "2.4");
    CHECK(format_shortest(-45.0) == "-45");
}

TEST_CASE("exponent formatting follows the fit method")
{
    CHECK(format_exponent(4.0, FitMethod::DiscreteSelection) == "4");
    CHECK(format_exponent(3.5, FitMethod::DiscreteSelection) == "3.5");
    CHECK(format_exponent(fixture_values::kFittedExponent, FitMethod::LeastSquares) == "3.899");
    CHECK(format_exponent(5.0, FitMethod::LeastSquares) == "5.000");
    CHECK(format_exponent(3.899, FitMethod::GridSearch) == "3.899");
}

TEST_CASE("prediction table")
{
    const SurveyCampaign campaign = testutil::load_fixture();
    const std::vector<double> exponents{3, 4, 5, 6};
    const PredictionTable table = make_prediction_table(campaign, exponents);
    REQUIRE(table.rows.size() == 20);
    REQUIRE(table.rows[0].model_db.size() == 4);
    for (int i = 0; i < fixture_values::kPointCount; ++i) {
        CHECK(std::fabs(table.rows[i].model_db[0] - fixture_values::kLdpl3[i]) < 0.01);
        CHECK(std::fabs(table.rows[i].model_db[1] - fixture_values::kLdpl4[i]) < 0.01);
        CHECK(std::fabs(table.rows[i].model_db[2] - fixture_values::kLdpl5[i]) < 0.01);
        CHECK(std::fabs(table.rows[i].model_db[3] - fixture_values::kLdpl6[i]) < 0.01);
    }

    const std::string csv = prediction_table_csv(table);
    CHECK(csv.substr(0, csv.find('\n')) ==
          "point,distance_m,mean_db,ldpl3_db,ldpl4_db,ldpl5_db,ldpl6_db");
    CHECK(csv.find("\nP1,7,-45.20,-25.35,-33.80,-42.25,-50.71\n") != std::string::npos);
    CHECK(csv.find("\nP20,137,-84.20,-64.10,-85.47,-106.84,-128.20\n") != std::string::npos);

    // means-only table
    const PredictionTable bare = make_prediction_table(campaign, {});
    const std::string bare_csv = prediction_table_csv(bare);
    CHECK(bare_csv.substr(0, bare_csv.find('\n')) == "point,distance_m,mean_db");
}

TEST_CASE("report bundle on the fixture")
{
    const SurveyCampaign campaign = testutil::load_fixture();
    const ReportBundle bundle = build_report(campaign);

    CHECK(bundle.fit.exponent == 4.0);
    CHECK(bundle.fit.method == FitMethod::DiscreteSelection);
    CHECK(bundle.classes.size() == 2);
    REQUIRE(bundle.regression.has_value());
    CHECK(std::fabs(bundle.regression->r_squared - 0.91) <= 0.01);
    CHECK(bundle.prediction_table.rows.size() == campaign.points.size());
    CHECK(bundle.real_vs_model.rows.size() == campaign.points.size());
    REQUIRE(bundle.regression_vs_model.has_value());
    CHECK(bundle.regression_vs_model->rows.size() == campaign.points.size());
    CHECK(bundle.exceeding.labels == std::vector<std::string>{"P1", "P2"});
    CHECK(bundle.warnings.empty());
}

TEST_CASE("report bundle with a forced exponent")
{
    const SurveyCampaign campaign = testutil::load_fixture();
    ReportOptions options;
    options.forced_exponent = 6.0;
    const ReportBundle bundle = build_report(campaign, options);
    CHECK(bundle.fit.exponent == 6.0);
    CHECK(std::fabs(bundle.real_vs_model.rows.back().estimate_db - (-128.20)) < 0.01);
    // the forced model misses far points badly
    CHECK(bundle.exceeding.count > 10);
}

TEST_CASE("report bundle in continuous mode")
{
    const SurveyCampaign campaign = testutil::load_fixture();
    ReportOptions options;
    options.fit_mode = FitMethod::LeastSquares;
    const ReportBundle bundle = build_report(campaign, options);
    CHECK(bundle.fit.exponent ==
          doctest::Approx(fixture_values::kFittedExponent).epsilon(1e-12));
    CHECK(bundle.fit.method == FitMethod::LeastSquares);
}

TEST_CASE("single-point campaign skips regression with a reason")
{
    SurveyCampaign campaign = single_point_campaign();
    ReportOptions options;
    options.table_exponents = {3, 4};
    const ReportBundle bundle = build_report(campaign, options);
    CHECK_FALSE(bundle.regression.has_value());
    CHECK_FALSE(bundle.regression_vs_model.has_value());
    CHECK_FALSE(bundle.regression_skip_reason.empty());

    testutil::TempDir dir("report_single");
    write_report(bundle, campaign, dir.path());
    const auto files = read_dir(dir.path());
    CHECK(files.count("errors_regression_vs_ldpl.csv") == 0);
    CHECK(files.count("series_regression.csv") == 0);
    CHECK(files.at("report.txt").find("skipped:") != std::string::npos);
}

TEST_CASE("points inside the reference distance are flagged")
{
    SurveyCampaign campaign = single_point_campaign();
    campaign.points.push_back({"P0", 0.5, {-10.0, -12.0}});
    std::swap(campaign.points[0], campaign.points[1]);
    ReportOptions options;
    options.table_exponents = {4};
    const ReportBundle bundle = build_report(campaign, options);
    REQUIRE(bundle.warnings.size() == 1);
    CHECK(bundle.warnings[0].find("P0") != std::string::npos);
    CHECK(bundle.warnings[0].find("reference distance") != std::string::npos);
}

TEST_CASE("written report is complete and deterministic")
{
    const SurveyCampaign campaign = testutil::load_fixture();
    const ReportBundle bundle = build_report(campaign);

    testutil::TempDir dir_a("report_a");
    testutil::TempDir dir_b("report_b");
    write_report(bundle, campaign, dir_a.path());
    write_report(bundle, campaign, dir_b.path());

    const auto files_a = read_dir(dir_a.path());
    const auto files_b = read_dir(dir_b.path());

    const std::set<std::string> expected{
        "report.txt",       "predictions.csv",          "errors_real_vs_ldpl.csv",
        "errors_regression_vs_ldpl.csv", "series_measured.csv", "series_ldpl3.csv",
        "series_ldpl4.csv", "series_ldpl5.csv",         "series_ldpl6.csv",
        "series_regression.csv"};
    std::set<std::string> actual;
    for (const auto& [name, content] : files_a)
        actual.insert(name);
    CHECK(actual == expected);

    CHECK(files_a == files_b); // byte-identical

    const std::string& report = files_a.at("report.txt");
    CHECK(report.find(kToolVersion) != std::string::npos);
    CHECK(report.find("n = 4") != std::string::npos);
    CHECK(report.find("r_squared = 0.91") != std::string::npos);
    CHECK(report.find("exceeding = P1, P2") != std::string::npos);
    CHECK(report.find("real vs ldpl4") != std::string::npos);
}

TEST_CASE("emitted series round-trip to the prediction table")
{
    const SurveyCampaign campaign = testutil::load_fixture();
    const ReportBundle bundle = build_report(campaign);
    testutil::TempDir dir("report_series");
    write_report(bundle, campaign, dir.path());

    const std::string series = testutil::read_file((dir.path() / "series_measured.csv").string());
    std::size_t pos = series.find('\n') + 1; // skip header
    for (const auto& row : bundle.prediction_table.rows) {
        const std::size_t end = series.find('\n', pos);
        REQUIRE(end != std::string::npos);
        const std::string line = series.substr(pos, end - pos);
        CHECK(line == format_shortest(row.distance_m) + "," + format_db(row.mean_db));
        pos = end + 1;
    }
    CHECK(pos == series.size());
}
