#pragma once

namespace heo {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace heo
