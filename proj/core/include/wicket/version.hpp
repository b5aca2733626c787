#pragma once

namespace wicket {

inline constexpr const char* kToolName = "wicketlab";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace wicket
