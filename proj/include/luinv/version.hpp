#pragma once

namespace luinv {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace luinv
