#pragma once

namespace scalesync {

inline constexpr const char* kToolName = "scalesync";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace scalesync
