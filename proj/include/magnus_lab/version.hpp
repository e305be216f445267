#pragma once

namespace magnus_lab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace magnus_lab
