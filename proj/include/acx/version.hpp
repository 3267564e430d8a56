#pragma once

namespace acx {
inline constexpr const char* kVersion = "0.1.0";
}
