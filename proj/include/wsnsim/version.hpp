#pragma once

namespace wsnsim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wsnsim
