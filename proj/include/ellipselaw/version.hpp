#pragma once

namespace ellipselaw {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ellipselaw
