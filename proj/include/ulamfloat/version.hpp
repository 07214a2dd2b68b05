#pragma once

namespace ulamfloat {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ulamfloat
