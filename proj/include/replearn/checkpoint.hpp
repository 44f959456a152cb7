#pragma once

#include <stdexcept>
#include <string>

#include "replearn/network.hpp"

namespace replearn {

/// Thrown for malformed input files (checkpoints, CSV). The CLI maps
/// this to its data-error exit code.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Self-describing text checkpoint for a representation network: layer
/// sizes plus row-major weight arrays, serialized so a reload is
/// bit-faithful.
std::string rep_to_json(const RepresentationNet& rep);
RepresentationNet rep_from_json(const std::string& text);

void save_text_file(const std::string& path, const std::string& content);
std::string load_text_file(const std::string& path);

}  // namespace replearn
