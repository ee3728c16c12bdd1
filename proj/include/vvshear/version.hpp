#pragma once

namespace vvshear {
inline constexpr const char* kVersion = "0.1.0";
}
