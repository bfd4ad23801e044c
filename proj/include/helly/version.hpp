#pragma once

namespace helly {

inline constexpr const char* kToolName = "hellytest";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace helly
