#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "fairfan/geometry.hpp"

namespace fairfan {

// Fractional split of the atoms sitting on a cut line. Keys are
// (measure index, atom index); values are absolute weight portions.
struct SplitCut {
  Hyperplane line;
  std::map<std::pair<int, int>, std::pair<Rat, Rat>> boundary_assignment;  // left, right
};

// Binary cut history. Leaves carry the final region index; inner nodes carry
// the cut line and the boundary shares decided when the cut was made.
struct CutNode {
  bool is_leaf = false;
  int region = -1;
  SplitCut cut;
  std::unique_ptr<CutNode> left, right;
};

struct FanProvenance {
  Flat apex;
  AngularProjection plane;  // axes only; images unused after construction
  std::vector<Vec2q> rays;  // cyclic order, matches region order
};

// Closed convex regions with pairwise disjoint interiors covering R^d.
struct ConvexPartition {
  int dim = 0;
  std::vector<ConvexRegion> regions;
  std::shared_ptr<CutNode> cut_tree;           // set by the equipartition engine
  std::shared_ptr<FanProvenance> fan;          // set by the fan construction

  int size() const { return static_cast<int>(regions.size()); }
};

// Structural validity per the partition definition: every region has a
// strictly interior point and interiors are pairwise disjoint. Coverage of
// R^d is certified on probe points only (constructors guarantee it globally).
bool partition_is_valid(const ConvexPartition& part, const std::vector<Point>& probes);

}  // namespace fairfan
