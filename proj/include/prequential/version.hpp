#pragma once

namespace prequential {

inline constexpr const char *kVersion = "1.0.0";

} // namespace prequential
