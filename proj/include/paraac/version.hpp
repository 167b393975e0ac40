#pragma once

namespace paraac {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace paraac
