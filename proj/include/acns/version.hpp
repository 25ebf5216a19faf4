#pragma once

namespace acns {
inline constexpr const char* kVersion = "0.1.0";
}
