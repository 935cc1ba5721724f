#pragma once

namespace rcf {

inline constexpr const char* kVersion = "0.1.0";

/// Default seed used by tutorial runs and CLI defaults, for reproducibility.
inline constexpr unsigned long long kDefaultSeed = 20250809ull;

}  // namespace rcf
