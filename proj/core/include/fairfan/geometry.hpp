#pragma once

#include <optional>
#include <vector>

#include "fairfan/rational.hpp"

namespace fairfan {

using Point = Vec;

// Oriented affine hyperplane {x : <normal, x> = offset}, normal != 0.
struct Hyperplane {
  Vec normal;
  Rat offset;

  // Sign of <normal, p> - offset.
  int side(const Point& p) const;
};

// Affine (d-2)-flat: basepoint plus d-2 linearly independent directions.
struct Flat {
  Point base;
  std::vector<Vec> directions;

  int ambient_dim() const { return static_cast<int>(base.size()); }
};

struct HalfSpace {
  Hyperplane plane;
  int side;  // +1: <n,x> >= offset, -1: <n,x> <= offset

  bool contains(const Point& p) const;
};

// Closed convex region given as an intersection of half-spaces.
// An empty list means all of R^d.
struct ConvexRegion {
  std::vector<HalfSpace> halves;

  bool contains(const Point& p) const;
};

// Orientation of d+1 points in R^d: sign of det [p_i - p_0].
// 0 iff the points are affinely dependent.
int orientation(const std::vector<Point>& pts);

// Rank of the affine span of the points (0 for a single point).
int affine_rank(const std::vector<Point>& pts);

bool affinely_independent(const std::vector<Point>& pts);

// No d+1 of the points lie on a common affine hyperplane. For fewer than
// d+1 points this degenerates to affine independence of the whole set.
bool in_general_position(const std::vector<Point>& pts, int dim);

// Deterministic perturbation onto moment-curve offsets: returns points in
// general position with squared displacement of point j at most max_disp2[j].
// Throws ParamError if no admissible offset is found within the retry budget.
std::vector<Point> perturb_to_general_position(const std::vector<Point>& pts, int dim,
                                               const std::vector<Rat>& max_disp2);

struct Ridge {
  std::vector<int> indices;  // d-1 point indices spanning a (d-2)-face
  Flat flat;
  Hyperplane support;  // contains the flat; every input point on side >= 0
};

// One (d-2)-face of the convex hull, found by supporting-hyperplane
// rotations from a lexicographically extreme vertex. Requires >= d points
// in general position, d >= 2.
Ridge find_ridge(const std::vector<Point>& pts, int dim);

// Points of the orthogonal complement of a flat's direction space, in a
// rational orthogonal (not orthonormal) basis (axis_u, axis_v). True metric
// on stored coordinates (s,t) is s^2/u_norm2 + t^2/v_norm2.
struct AngularProjection {
  Point origin;
  Vec axis_u, axis_v;
  Rat u_norm2, v_norm2;
  struct Image {
    int index;     // index into the projected input
    Vec2q coords;  // exact stored coordinates
    double angle;  // float annotations only
    double radius;
  };
  std::vector<Image> images;

  Vec2q project(const Point& p) const;
  // True squared distance between stored coordinates.
  Rat metric_dist2(const Vec2q& a, const Vec2q& b) const;
  Rat metric_norm2(const Vec2q& a) const { return metric_dist2(a, Vec2q{Rat(0), Rat(0)}); }
  Rat metric_bilinear(const Vec2q& a, const Vec2q& b) const;
  // Hyperplane through the flat whose projection is the line spanned by dir;
  // the positive side matches cross(dir, .) > 0 in stored coordinates.
  Hyperplane lift_line(const Vec2q& dir) const;
};

// Projects each point to the 2-plane orthogonal to the flat. Throws
// ParamError if a point lies on the flat (radius 0).
AngularProjection project_about_flat(const std::vector<Point>& pts, const Flat& flat);

// Strictly feasible point of a system of open/closed half-spaces, via exact
// Fourier-Motzkin elimination. Closed constraints are tightened to open ones,
// so a returned point is interior. nullopt = empty interior.
std::optional<Point> strict_interior_point(const ConvexRegion& region, int dim);

// Exact squared Euclidean distance from p to the (nonempty) region.
Rat dist2_point_region(const Point& p, const ConvexRegion& region);

}  // namespace fairfan
