#pragma once

namespace olu {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace olu
