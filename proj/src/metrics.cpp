#include "plcal/metrics.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace plcal {

double relative_error(double reference_db, double estimate_db)
{
    if (reference_db == 0.0)
        throw std::invalid_argument("relative_error: zero reference");
    return std::fabs(reference_db - estimate_db) / std::fabs(reference_db);
}

std::size_t ErrorTable::count_below(double threshold) const
{
    std::size_t count = 0;
    for (const auto& row : rows) {
        if (row.relative_error < threshold)
            ++count;
    }
    return count;
}

ErrorTable error_table(std::span<const LabeledValue> references,
                       std::span<const LabeledValue> estimates)
{
    std::map<std::string_view, double> by_label;
    for (const auto& estimate : estimates) {
        if (!by_label.emplace(estimate.label, estimate.value_db).second)
            throw std::invalid_argument("error_table: duplicate estimate for point '" +
                                        estimate.label + "'");
    }

    ErrorTable table;
    table.rows.reserve(references.size());
    double sum = 0.0;
    for (const auto& reference : references) {
        const auto it = by_label.find(reference.label);
        if (it == by_label.end())
            throw std::invalid_argument("error_table: missing estimate for point '" +
                                        reference.label + "'");
        const double error = relative_error(reference.value_db, it->second);
        table.rows.push_back({reference.label, reference.value_db, it->second, error});
        sum += error;
        table.max_relative_error = std::max(table.max_relative_error, error);
    }
    if (!table.rows.empty())
        table.mean_relative_error = sum / static_cast<double>(table.rows.size());
    return table;
}

ErrorTable error_table(const SurveyCampaign& campaign, std::span<const LabeledValue> estimates)
{
    std::vector<LabeledValue> references;
    references.reserve(campaign.points.size());
    for (const auto& point : campaign.points)
        references.push_back({point.label, point_mean(point)});
    return error_table(references, estimates);
}

ThresholdReport threshold_report(const ErrorTable& table, double threshold)
{
    if (!(threshold > 0.0) || !(threshold < 1.0))
        throw std::invalid_argument("threshold_report: threshold must be in (0, 1)");
    ThresholdReport report;
    for (const auto& row : table.rows) {
        if (row.relative_error > threshold) {
            ++report.count;
            report.labels.push_back(row.label);
        }
    }
    return report;
}

int percent(double fraction)
{
    return static_cast<int>(std::lround(fraction * 100.0));
}

} // namespace plcal
