#include "replearn/checkpoint.hpp"

#include <fstream>
#include <sstream>

#include "json_detail.hpp"

namespace replearn {

std::string rep_to_json(const RepresentationNet& rep) {
    return detail::rep_to_json_obj(rep).dump(1) + "\n";
}

RepresentationNet rep_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("bad checkpoint JSON: ") + e.what());
    }
    return detail::rep_from_json_obj(j);
}

void save_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string load_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace replearn
