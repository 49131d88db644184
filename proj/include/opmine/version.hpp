#pragma once

namespace opmine {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace opmine
