#pragma once

namespace thompson {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace thompson
