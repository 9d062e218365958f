#pragma once

namespace jointrank {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace jointrank
