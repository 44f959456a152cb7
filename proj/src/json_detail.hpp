#pragma once

// Shared JSON helpers for the checkpoint and archive formats.

#include <json.hpp>

#include "replearn/checkpoint.hpp"
#include "replearn/network.hpp"

namespace replearn::detail {

inline nlohmann::json rep_to_json_obj(const RepresentationNet& rep) {
    nlohmann::json j;
    j["format"] = "representation-net-v1";
    j["layer_sizes"] = rep.layer_sizes();
    nlohmann::json layers = nlohmann::json::array();
    for (const auto& l : rep.layers) layers.push_back(l.w);
    j["weights"] = std::move(layers);
    return j;
}

inline RepresentationNet rep_from_json_obj(const nlohmann::json& j) {
    try {
        if (j.at("format").get<std::string>() != "representation-net-v1")
            throw DataError("unknown checkpoint format: " + j.at("format").dump());
        const auto sizes = j.at("layer_sizes").get<std::vector<int>>();
        const auto weights = j.at("weights").get<std::vector<std::vector<double>>>();
        if (sizes.size() < 2 || weights.size() != sizes.size() - 1)
            throw DataError("checkpoint layer_sizes/weights mismatch");
        RepresentationNet rep;
        for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
            DenseLayer layer = DenseLayer::zeros(sizes[l], sizes[l + 1]);
            if (weights[l].size() != layer.w.size())
                throw DataError("checkpoint weight count mismatch in layer " + std::to_string(l));
            layer.w = weights[l];
            rep.layers.push_back(std::move(layer));
        }
        return rep;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("bad checkpoint JSON: ") + e.what());
    }
}

inline nlohmann::json output_to_json_obj(const OutputNet& out) {
    nlohmann::json j;
    j["fan_in"] = out.fan_in;
    j["activation"] = out.activation == OutputNet::Activation::Sigmoid ? "sigmoid" : "linear";
    j["weights"] = out.w;
    return j;
}

inline OutputNet output_from_json_obj(const nlohmann::json& j) {
    try {
        OutputNet out = OutputNet::zeros(j.at("fan_in").get<int>());
        const auto act = j.at("activation").get<std::string>();
        if (act == "sigmoid")
            out.activation = OutputNet::Activation::Sigmoid;
        else if (act == "linear")
            out.activation = OutputNet::Activation::Linear;
        else
            throw DataError("unknown output activation: " + act);
        auto w = j.at("weights").get<std::vector<double>>();
        if (w.size() != out.w.size()) throw DataError("output net weight count mismatch");
        out.w = std::move(w);
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("bad checkpoint JSON: ") + e.what());
    }
}

}  // namespace replearn::detail
