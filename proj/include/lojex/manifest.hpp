#ifndef LOJEX_MANIFEST_HPP
#define LOJEX_MANIFEST_HPP

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>

namespace lojex {

inline constexpr const char* kToolName = "lojex";
inline constexpr const char* kToolVersion = "0.1.0";

/// Provenance block embedded in every CLI output. Timing is kept out of the
/// serialized payload so equal manifests give byte-identical payloads.
struct RunManifest {
    std::string command;
    nlohmann::json config = nlohmann::json::object();   // resolved, defaults included
    std::map<std::string, std::string> input_digests;   // path -> fnv1a64 hex
    uint64_t seed = 0;
    double wall_seconds = 0.0;  // human-channel only

    nlohmann::json payload_json() const {
        return nlohmann::json{{"command", command},
                              {"config", config},
                              {"inputs", input_digests},
                              {"seed", seed},
                              {"tool", kToolName},
                              {"version", kToolVersion}};
    }

    nlohmann::json wrap(nlohmann::json result) const {
        return nlohmann::json{{"manifest", payload_json()}, {"result", std::move(result)}};
    }
};

}  // namespace lojex

#endif
