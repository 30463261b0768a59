#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace kakeya {

std::string sha256_hex(std::string_view data);

/// Reproducibility record written next to the output on --manifest. All
/// computations are deterministic, so there are no seeds; re-running the
/// recorded command line reproduces an output with the same digest.
struct RunManifest {
    std::vector<std::string> command_line;
    std::string field;
    std::string tool_version;
    double wall_clock_s = 0.0;
    std::string result_digest;  // "sha256:<hex>" of the emitted document

    nlohmann::json to_json() const;
};

}  // namespace kakeya
