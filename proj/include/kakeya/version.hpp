#pragma once

namespace kakeya {

inline constexpr const char* kToolName = "kakeyatk";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace kakeya
