#include <doctest.h>

#include <cmath>

#include "fairfan/geometry.hpp"
#include "fairfan/instances.hpp"

using namespace fairfan;

namespace {

Point pt2(long x, long y) { return Point{Rat(x), Rat(y)}; }
Point pt3(long x, long y, long z) { return Point{Rat(x), Rat(y), Rat(z)}; }

std::vector<Point> random_points(Rng& rng, int count, int dim) {
  std::vector<Point> pts;
  for (int i = 0; i < count; ++i) {
    Point p(dim);
    for (int k = 0; k < dim; ++k) p[k] = Rat(rng.range(-100, 100));
    pts.push_back(p);
  }
  return pts;
}

// A pair spans a hull edge of a 3D point set iff some plane through the pair
// keeps every point on one closed side; in general position such a plane
// passes through a third point.
bool is_hull_edge_3d(const std::vector<Point>& pts, int i, int j) {
  for (size_t k = 0; k < pts.size(); ++k) {
    if (static_cast<int>(k) == i || static_cast<int>(k) == j) continue;
    bool all_nonneg = true, all_nonpos = true;
    for (size_t l = 0; l < pts.size(); ++l) {
      if (l == k || static_cast<int>(l) == i || static_cast<int>(l) == j) continue;
      int s = orientation({pts[i], pts[j], pts[k], pts[l]});
      if (s > 0) all_nonpos = false;
      if (s < 0) all_nonneg = false;
    }
    if (all_nonneg || all_nonpos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("orientation on the listed configurations") {
  CHECK(orientation({pt2(0, 0), pt2(1, 0), pt2(0, 1)}) == 1);
  CHECK(orientation({pt2(0, 0), pt2(1, 0), pt2(2, 0)}) == 0);
  CHECK(orientation({pt3(0, 0, 0), pt3(1, 0, 0), pt3(0, 1, 0), pt3(0, 0, 1)}) == 1);
  CHECK_THROWS_AS(orientation({pt2(0, 0), pt2(1, 0)}), ParamError);
}

TEST_CASE("orientation is antisymmetric and translation invariant") {
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    auto pts = random_points(rng, 3, 2);
    int base = orientation(pts);
    std::swap(pts[0], pts[1]);
    CHECK(orientation(pts) == -base);
    std::swap(pts[0], pts[1]);
    Point shift = pt2(rng.range(-50, 50), rng.range(-50, 50));
    std::vector<Point> moved;
    for (const auto& p : pts) moved.push_back(add(p, shift));
    CHECK(orientation(moved) == base);
  }
}

TEST_CASE("find_ridge returns a hull vertex in the plane") {
  std::vector<Point> square{pt2(0, 0), pt2(4, 1), pt2(5, 6), pt2(1, 5)};
  Ridge r = find_ridge(square, 2);
  REQUIRE(r.indices.size() == 1);
  for (const auto& p : square) CHECK(r.support.side(p) >= 0);
  CHECK(r.support.side(square[r.indices[0]]) == 0);
}

TEST_CASE("find_ridge rejects degenerate input") {
  CHECK_THROWS_AS(find_ridge({pt2(0, 0), pt2(1, 1), pt2(2, 2)}, 2), ParamError);
  CHECK_THROWS_AS(find_ridge({pt2(0, 0)}, 2), ParamError);
}

TEST_CASE("find_ridge returns a genuine hull edge in 3d") {
  Rng rng(7);
  int done = 0;
  while (done < 10) {
    auto pts = random_points(rng, 5, 3);
    if (!in_general_position(pts, 3)) continue;
    ++done;
    Ridge r = find_ridge(pts, 3);
    REQUIRE(r.indices.size() == 2);
    CHECK(is_hull_edge_3d(pts, r.indices[0], r.indices[1]));
    for (const auto& p : pts) CHECK(r.support.side(p) >= 0);
  }
}

TEST_CASE("angular projection matches planar polar coordinates") {
  Flat vertex{pt2(0, 0), {}};
  auto proj = project_about_flat({pt2(1, 1)}, vertex);
  CHECK(proj.images[0].angle == doctest::Approx(M_PI / 4));
  CHECK(proj.images[0].radius == doctest::Approx(std::sqrt(2.0)));

  Flat axis{pt3(0, 0, 0), {Vec{Rat(0), Rat(0), Rat(1)}}};
  auto proj3 = project_about_flat({pt3(1, 0, 5)}, axis);
  CHECK(proj3.images[0].angle == doctest::Approx(0.0));
  CHECK(proj3.images[0].radius == doctest::Approx(1.0));

  CHECK_THROWS_AS(project_about_flat({pt3(0, 0, 3)}, axis), ParamError);
}

TEST_CASE("projection images of a ridge complement fill a closed half-plane") {
  Rng rng(11);
  int done = 0;
  while (done < 10) {
    auto pts = random_points(rng, 7, 3);
    if (!in_general_position(pts, 3)) continue;
    ++done;
    Ridge r = find_ridge(pts, 3);
    std::vector<Point> rest;
    for (size_t i = 0; i < pts.size(); ++i)
      if (std::find(r.indices.begin(), r.indices.end(), static_cast<int>(i)) == r.indices.end())
        rest.push_back(pts[i]);
    auto proj = project_about_flat(rest, r.flat);
    bool found = false;
    for (const auto& a : proj.images) {
      bool ok = true;
      for (const auto& b : proj.images)
        if (sgn(cross(a.coords, b.coords)) < 0) ok = false;
      if (ok) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("lifted lines agree with projected sidedness exactly") {
  Rng rng(13);
  int done = 0;
  while (done < 10) {
    auto pts = random_points(rng, 6, 3);
    if (!in_general_position(pts, 3)) continue;
    ++done;
    Ridge r = find_ridge(pts, 3);
    std::vector<Point> rest;
    for (size_t i = 0; i < pts.size(); ++i)
      if (std::find(r.indices.begin(), r.indices.end(), static_cast<int>(i)) == r.indices.end())
        rest.push_back(pts[i]);
    auto proj = project_about_flat(rest, r.flat);
    for (const auto& img : proj.images) {
      Hyperplane lifted = proj.lift_line(img.coords);
      for (size_t q = 0; q < rest.size(); ++q)
        CHECK(lifted.side(rest[q]) == sgn(cross(img.coords, proj.images[q].coords)));
    }
  }
}

TEST_CASE("perturbation repairs collinear points within its budget") {
  std::vector<Point> pts{pt2(0, 0), pt2(1, 0), pt2(2, 0), pt2(3, 0)};
  std::vector<Rat> bounds(4, rat(1, 100));
  auto fixed = perturb_to_general_position(pts, 2, bounds);
  CHECK(in_general_position(fixed, 2));
  for (size_t i = 0; i < pts.size(); ++i) CHECK(norm2(sub(fixed[i], pts[i])) <= bounds[i]);
}

TEST_CASE("strict interior points and emptiness") {
  ConvexRegion wedge;
  wedge.halves.push_back({Hyperplane{Vec{Rat(1), Rat(0)}, Rat(0)}, +1});
  wedge.halves.push_back({Hyperplane{Vec{Rat(0), Rat(1)}, Rat(0)}, +1});
  auto p = strict_interior_point(wedge, 2);
  REQUIRE(p.has_value());
  CHECK(sgn((*p)[0]) > 0);
  CHECK(sgn((*p)[1]) > 0);

  ConvexRegion slab;
  slab.halves.push_back({Hyperplane{Vec{Rat(1), Rat(0)}, Rat(0)}, +1});
  slab.halves.push_back({Hyperplane{Vec{Rat(1), Rat(0)}, Rat(0)}, -1});
  CHECK_FALSE(strict_interior_point(slab, 2).has_value());
}

TEST_CASE("exact point-to-region distances") {
  ConvexRegion quadrant;
  quadrant.halves.push_back({Hyperplane{Vec{Rat(1), Rat(0)}, Rat(0)}, +1});
  quadrant.halves.push_back({Hyperplane{Vec{Rat(0), Rat(1)}, Rat(0)}, +1});
  CHECK(dist2_point_region(pt2(3, 4), quadrant) == Rat(0));
  CHECK(dist2_point_region(pt2(-3, 4), quadrant) == Rat(9));
  CHECK(dist2_point_region(pt2(-3, -4), quadrant) == Rat(25));

  ConvexRegion plane3;
  plane3.halves.push_back({Hyperplane{Vec{Rat(1), Rat(1), Rat(1)}, Rat(3)}, +1});
  CHECK(dist2_point_region(pt3(0, 0, 0), plane3) == Rat(3));
}
