#pragma once

namespace tverberg {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace tverberg
