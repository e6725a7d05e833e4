#pragma once

namespace polarfade {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace polarfade
