#pragma once

#include <string_view>

namespace circulant {

// Also used as the code-version tag in census cache keys.
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace circulant
