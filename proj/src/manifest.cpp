#include "kakeya/manifest.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace kakeya {

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

nlohmann::json RunManifest::to_json() const {
    nlohmann::json j;
    j["command_line"] = command_line;
    j["field"] = field;
    j["seeds"] = nullptr;  // everything is deterministic
    j["tool_version"] = tool_version;
    j["wall_clock_s"] = wall_clock_s;
    j["result_digest"] = result_digest;
    return j;
}

}  // namespace kakeya
