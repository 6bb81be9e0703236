#pragma once

#include "fairfan/measures.hpp"

namespace fairfan {

// n-fan about a (d-2)-flat apex: ray directions live in the apex's angular
// projection plane and are stored as exact direction vectors of the defining
// projected points; regions are the wedges between cyclically consecutive
// rays, emitted in that cyclic order.
struct FanPartition {
  Flat apex;
  AngularProjection plane;
  std::vector<Vec2q> rays;
  ConvexPartition partition;

  std::vector<Point> anchors;       // one per measure, perturbed
  std::vector<int> ridge_indices;   // the d-1 anchors spanning the apex
  int w_anchor = -1;                // the extra on-hyperplane anchor
  std::vector<int> anchor_counts;   // anchors per closed wedge
};

// One support point per measure: the highest-weight atom (ties by atom
// index), perturbed into general position within half its bump radius.
std::vector<Point> choose_anchors(const MeasureFamily& family);

struct RotatedCut {
  std::vector<int> order;  // image positions sorted from the supporting boundary
  int w_position;          // position in `order` of the on-hyperplane point
  Vec2q w_dir;             // direction of w; the cut line is span(w_dir)
};

// Rotates a line through the projection origin until exactly
// `interior_target` points sit strictly on the near side and one point (w)
// sits on the line. Requires the face property: all images in a closed
// half-plane through the origin.
RotatedCut rotate_to_cut(const AngularProjection& proj, int interior_target);

// The full construction: requires d >= 2, n >= 2, c >= d, m >= n(c-d)+d.
FanPartition build_fan(const MeasureFamily& family, int n, int c);

}  // namespace fairfan
