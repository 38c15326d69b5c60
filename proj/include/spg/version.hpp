#pragma once

namespace spg {

inline constexpr const char* kToolName = "spg";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace spg
