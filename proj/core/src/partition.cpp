#include "fairfan/partition.hpp"

namespace fairfan {

bool partition_is_valid(const ConvexPartition& part, const std::vector<Point>& probes) {
  const int n = part.size();
  if (n == 0) return false;
  for (const auto& region : part.regions)
    if (!strict_interior_point(region, part.dim)) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ConvexRegion both = part.regions[i];
      for (const auto& h : part.regions[j].halves) both.halves.push_back(h);
      if (strict_interior_point(both, part.dim)) return false;
    }
  for (const auto& p : probes) {
    bool covered = false;
    for (const auto& region : part.regions)
      if (region.contains(p)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

}  // namespace fairfan
