#pragma once

#include <string>

namespace plcal {

/// Fixed two decimals; negative zero normalized to "0.00".
std::string format_db(double value);

/// Shortest decimal form that parses back to the same double.
std::string format_shortest(double value);

} // namespace plcal
