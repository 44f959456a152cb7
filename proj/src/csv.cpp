#include "replearn/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace replearn {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    // Shortest representation that round-trips: try increasing precision.
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) return buf;
    }
    return buf;
}

std::vector<int> parse_int_list(const std::string& csv_list) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= csv_list.size()) {
        std::size_t comma = csv_list.find(',', pos);
        if (comma == std::string::npos) comma = csv_list.size();
        const std::string tok = csv_list.substr(pos, comma - pos);
        if (!tok.empty()) {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("bad integer in list: " + tok);
            out.push_back(v);
        }
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

std::string format_int_list(const std::vector<int>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(values[i]);
    }
    return s;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    for (;;) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(pos));
            return fields;
        }
        fields.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
}

}  // namespace replearn
