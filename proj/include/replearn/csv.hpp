#pragma once

#include <string>
#include <vector>

namespace replearn {

/// Shortest decimal that parses back to exactly the same double.
std::string format_double(double v);

std::vector<int> parse_int_list(const std::string& csv_list);
std::string format_int_list(const std::vector<int>& values);

/// Split one CSV line on commas (no quoting; the formats here never need it).
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace replearn
