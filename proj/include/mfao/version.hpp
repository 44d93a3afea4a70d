#pragma once

namespace mfao {
inline constexpr const char* kVersion = "0.1.0";
}
