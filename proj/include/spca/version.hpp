#pragma once

namespace spca {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace spca
