#pragma once

namespace degenlab {

inline constexpr const char* kVersion = "0.1.0";

} // namespace degenlab
