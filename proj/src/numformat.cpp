#include "plcal/numformat.hpp"

#include <charconv>
#include <cstdio>

namespace plcal {

std::string format_db(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", value);
    std::string out = buf;
    if (out == "-0.00")
        out = "0.00";
    return out;
}

std::string format_shortest(double value)
{
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, result.ptr);
}

} // namespace plcal
