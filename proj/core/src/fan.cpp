#include "fairfan/fan.hpp"

#include <algorithm>

namespace fairfan {

std::vector<Point> choose_anchors(const MeasureFamily& family) {
  family.validate();
  const int d = family.dim;
  if (family.size() < d) throw ParamError("choose_anchors needs at least d measures");
  std::vector<Point> centers;
  std::vector<Rat> bounds;
  for (const auto& m : family.measures) {
    size_t best = 0;
    for (size_t a = 1; a < m.atoms.size(); ++a)
      if (m.atoms[a].weight > m.atoms[best].weight) best = a;
    centers.push_back(m.atoms[best].pos);
    bounds.push_back(m.bump_radius * m.bump_radius / 4);
  }
  return perturb_to_general_position(centers, d, bounds);
}

namespace {

// Total angular order of nonzero 2D vectors across a closed half-plane
// starting at r_start: first the r_start ray, then strictly ccw interior
// directions, then the antipodal ray.
struct AngularOrder {
  Vec2q r_start;

  int cls(const Vec2q& p) const {
    Rat c = cross(r_start, p);
    int s = sgn(c);
    if (s > 0) return 1;
    if (s == 0) return sgn(dot2(r_start, p)) > 0 ? 0 : 2;
    throw ParamError("point outside the supporting half-plane");
  }
  bool before(const Vec2q& p, int pi, const Vec2q& q, int qi) const {
    int cp = cls(p), cq = cls(q);
    if (cp != cq) return cp < cq;
    if (cp == 1) {
      int s = sgn(cross(p, q));
      if (s != 0) return s > 0;
    }
    return pi < qi;
  }
};

}  // namespace

RotatedCut rotate_to_cut(const AngularProjection& proj, int interior_target) {
  const int M = static_cast<int>(proj.images.size());
  if (interior_target < 0) throw ParamError("interior target must be >= 0");
  if (M < interior_target + 1) throw ParamError("not enough off-flat points for the rotation");

  // Face property: some image direction sees all the others on its ccw side.
  int start = -1;
  for (int i = 0; i < M && start < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < M && ok; ++j) {
      if (j == i) continue;
      if (sgn(cross(proj.images[i].coords, proj.images[j].coords)) < 0) ok = false;
    }
    if (ok) start = i;
  }
  if (start < 0) throw ParamError("projected points do not lie in a closed half-plane");

  AngularOrder ord{proj.images[start].coords};
  std::vector<int> order(M);
  for (int i = 0; i < M; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return ord.before(proj.images[a].coords, a, proj.images[b].coords, b);
  });

  RotatedCut rc;
  rc.order = order;
  rc.w_position = interior_target;
  rc.w_dir = proj.images[order[interior_target]].coords;

  int strictly_inside = 0, on_line = 0;
  for (int i = 0; i < M; ++i) {
    int s = sgn(cross(rc.w_dir, proj.images[i].coords));
    if (s < 0) ++strictly_inside;
    if (s == 0) ++on_line;
  }
  if (strictly_inside != interior_target || on_line != 1)
    throw GuaranteeError("rotation did not isolate a single on-hyperplane point");
  return rc;
}

namespace {

ConvexRegion wedge_region(const AngularProjection& proj, const Vec2q& from, const Vec2q& to) {
  ConvexRegion r;
  r.halves.push_back({proj.lift_line(from), +1});
  r.halves.push_back({proj.lift_line(to), -1});
  return r;
}

// Directions w + i*step*perp(w), i = 1..count, each hitting the open disk of
// true radius2 r2 around w in the projection metric.
std::vector<Vec2q> shadow_dirs(const AngularProjection& proj, const Vec2q& w, const Rat& r2,
                               int count) {
  std::vector<Vec2q> dirs;
  if (count <= 0) return dirs;
  Vec2q p = perp(w);
  Rat qw = proj.metric_norm2(w);
  Rat step(1);
  for (int attempt = 0; attempt < 512; ++attempt) {
    bool ok = true;
    for (int i = 1; i <= count && ok; ++i) {
      Rat s = step * i;
      Vec2q u{w.x + s * p.x, w.y + s * p.y};
      Rat qu = proj.metric_norm2(u);
      Rat gu = proj.metric_bilinear(w, u);
      if (sgn(gu) <= 0 || qw * qu - gu * gu >= r2 * qu) ok = false;
    }
    if (ok) {
      for (int i = 1; i <= count; ++i) {
        Rat s = step * i;
        dirs.push_back(Vec2q{w.x + s * p.x, w.y + s * p.y});
      }
      return dirs;
    }
    step /= 2;
  }
  throw GuaranteeError("could not place rays inside the bump shadow");
}

}  // namespace

FanPartition build_fan(const MeasureFamily& family, int n, int c) {
  family.validate();
  const int d = family.dim;
  const int m = family.size();
  if (d < 2) throw ParamError("the fan construction requires d >= 2");
  if (n < 2) throw ParamError("the fan construction requires n >= 2");
  if (c < d) throw ParamError("the fan construction requires c >= d");
  if (m < n * (c - d) + d)
    throw ParamError("hypothesis violated: need m >= n(c-d)+d measures");

  FanPartition fan;
  fan.anchors = choose_anchors(family);

  Ridge ridge = find_ridge(fan.anchors, d);
  fan.apex = ridge.flat;
  fan.ridge_indices = ridge.indices;

  std::vector<Point> off_flat;
  std::vector<int> off_idx;  // anchor (= measure) index per image
  for (int j = 0; j < m; ++j)
    if (std::find(ridge.indices.begin(), ridge.indices.end(), j) == ridge.indices.end()) {
      off_flat.push_back(fan.anchors[j]);
      off_idx.push_back(j);
    }
  fan.plane = project_about_flat(off_flat, fan.apex);

  RotatedCut rc = rotate_to_cut(fan.plane, c - d);
  fan.w_anchor = off_idx[rc.order[rc.w_position]];
  const Vec2q w = rc.w_dir;

  fan.rays.push_back(w);  // K_0
  if (c > d) {
    // Every (c-d)-th half-hyperplane after w, then the other half of H.
    for (int j = 1; j <= n - 2; ++j) {
      int pos = rc.w_position + j * (c - d);
      fan.rays.push_back(fan.plane.images[rc.order[pos]].coords);
    }
  } else {
    // Degenerate c = d: the extra rays all pass through w's bump shadow, so
    // every wedge keeps positive mass in mu_w.
    Rat half_r = family.measures[fan.w_anchor].bump_radius / 2;
    for (const Vec2q& dir : shadow_dirs(fan.plane, w, half_r * half_r, n - 2))
      fan.rays.push_back(dir);
  }
  fan.rays.push_back(Vec2q{-w.x, -w.y});  // K_{m-c+1}

  fan.partition.dim = d;
  for (int i = 0; i < n; ++i)
    fan.partition.regions.push_back(
        wedge_region(fan.plane, fan.rays[i], fan.rays[(i + 1) % n]));
  auto prov = std::make_shared<FanProvenance>();
  prov->apex = fan.apex;
  prov->plane = fan.plane;
  prov->plane.images.clear();
  prov->rays = fan.rays;
  fan.partition.fan = prov;

  for (const auto& region : fan.partition.regions) {
    int count = 0;
    for (const auto& a : fan.anchors)
      if (region.contains(a)) ++count;
    fan.anchor_counts.push_back(count);
  }
  return fan;
}

}  // namespace fairfan
