#pragma once

namespace rfg {
inline constexpr const char* kVersion = "0.1.0";
}
