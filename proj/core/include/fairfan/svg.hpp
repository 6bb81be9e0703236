#pragma once

#include <string>

#include "fairfan/measures.hpp"

namespace fairfan {

// Planar rendering: bump discs per atom (one color per measure), fan rays
// from the apex or cut lines from the partition provenance. Deterministic
// fixed-precision output.
std::string render_svg(const MeasureFamily& family, const ConvexPartition* part);

}  // namespace fairfan
