#pragma once

namespace reclearn {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace reclearn
