#pragma once

namespace gapcert {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gapcert
