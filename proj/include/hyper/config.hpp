#pragma once

#include <cstdint>

namespace hyper {

// Carrier sizes are capped so that a subset of the carrier fits into one
// machine word. The cap is a configuration constant; raise it (up to 32 for
// the current mask storage) if larger desk-scale structures are needed.
inline constexpr int kCarrierCap = 16;

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace hyper
