#include <doctest.h>

#include "fairfan/fan.hpp"
#include "fairfan/instances.hpp"

using namespace fairfan;

namespace {

MeasureFamily family_with_centers(std::vector<std::vector<long>> centers, int d) {
  MeasureFamily fam;
  fam.dim = d;
  for (size_t j = 0; j < centers.size(); ++j) {
    DiscreteMeasure m;
    m.label = "mu-" + std::to_string(j + 1);
    m.bump_radius = rat(1, 4);
    Point p(d);
    for (int k = 0; k < d; ++k) p[k] = Rat(centers[j][k]);
    m.atoms.push_back({p, Rat(1)});
    fam.measures.push_back(std::move(m));
  }
  return fam;
}

void check_fan_guarantees(const MeasureFamily& fam, int n, int c) {
  FanPartition fan = build_fan(fam, n, c);
  REQUIRE(fan.partition.size() == n);
  const int d = fam.dim;
  const int m = fam.size();

  auto counts = coverage_counts(fam, fan.partition, Rat(0));
  for (int cnt : counts) CHECK(cnt >= c);

  if (c > d) {
    for (int i = 0; i + 2 < n; ++i) CHECK(fan.anchor_counts[i] == c);
    CHECK(fan.anchor_counts[n - 2] == (m - n * c + n * d - d) + c);
    CHECK(fan.anchor_counts[n - 1] == c);
  }

  std::vector<Point> probes = fan.anchors;
  for (const auto& meas : fam.measures)
    for (const auto& a : meas.atoms) probes.push_back(a.pos);
  CHECK(partition_is_valid(fan.partition, probes));
}

}  // namespace

TEST_CASE("anchor selection needs at least d measures") {
  MeasureFamily fam = family_with_centers({{0, 0}}, 2);
  CHECK_THROWS_AS(choose_anchors(fam), ParamError);
}

TEST_CASE("collinear anchor centers get separated") {
  MeasureFamily fam = family_with_centers({{0, 0}, {10, 0}, {20, 0}, {30, 0}}, 2);
  auto anchors = choose_anchors(fam);
  CHECK(in_general_position(anchors, 2));
  for (size_t j = 0; j < anchors.size(); ++j)
    CHECK(norm2(sub(anchors[j], fam.measures[j].atoms[0].pos)) <
          fam.measures[j].bump_radius * fam.measures[j].bump_radius);
}

TEST_CASE("rotation isolates the (target+1)-th point from the boundary") {
  // Five off-flat points sorted by angle from the supporting boundary.
  Flat vertex{Point{Rat(0), Rat(0)}, {}};
  std::vector<Point> pts{Point{Rat(10), Rat(1)}, Point{Rat(10), Rat(3)}, Point{Rat(10), Rat(6)},
                         Point{Rat(10), Rat(10)}, Point{Rat(10), Rat(15)}};
  auto proj = project_about_flat(pts, vertex);
  RotatedCut rc = rotate_to_cut(proj, 1);
  CHECK(proj.images[rc.order[rc.w_position]].index == 1);

  // Exhaustive oracle: only one point leaves exactly `target` others strictly
  // on the near side of its line.
  int matches = 0;
  for (const auto& w : proj.images) {
    int inside = 0;
    for (const auto& q : proj.images)
      if (sgn(cross(w.coords, q.coords)) < 0) ++inside;
    if (inside == 1) {
      ++matches;
      CHECK(w.index == 1);
    }
  }
  CHECK(matches == 1);

  CHECK_THROWS_AS(rotate_to_cut(proj, 5), ParamError);
  RotatedCut supporting = rotate_to_cut(proj, 0);
  CHECK(proj.images[supporting.order[0]].index == 0);
}

TEST_CASE("fan construction meets the coverage bound on seeded instances") {
  for (uint64_t seed : {1u, 2u, 3u, 4u}) {
    MeasureFamily fam = gen_random_family(2, 5 * 2 + 2, seed);
    check_fan_guarantees(fam, 5, 4);  // d=2, n=5, c=4, m=12
  }
}

TEST_CASE("surplus measures are absorbed into the last wedge") {
  MeasureFamily fam = gen_random_family(2, 14, 99);
  check_fan_guarantees(fam, 5, 4);
}

TEST_CASE("three dimensions, mixed parameters") {
  for (uint64_t seed : {5u, 6u}) {
    MeasureFamily fam = gen_random_family(3, 2 * 2 + 3, seed);
    check_fan_guarantees(fam, 2, 5);  // d=3, n=2, c=5, m=7
  }
  MeasureFamily fam = gen_random_family(3, 3 * 1 + 3, 8);
  check_fan_guarantees(fam, 3, 4);  // d=3, n=3, c=4, m=6
}

TEST_CASE("degenerate c = d keeps every wedge on the w bump") {
  MeasureFamily fam = gen_random_family(2, 2, 123);
  check_fan_guarantees(fam, 2, 2);  // n=2, c=d, m=d: two half-planes through w
  MeasureFamily fam2 = gen_random_family(2, 2, 124);
  check_fan_guarantees(fam2, 4, 2);  // extra rays through the bump shadow
  MeasureFamily fam3 = gen_random_family(3, 3, 125);
  check_fan_guarantees(fam3, 3, 3);
}

TEST_CASE("every wedge keeps closed-mode mass in the apex anchors' measures") {
  MeasureFamily fam = gen_random_family(2, 12, 17);
  FanPartition fan = build_fan(fam, 5, 4);
  for (const auto& region : fan.partition.regions)
    for (int j : fan.ridge_indices)
      CHECK(sgn(mass(fam.measures[j], region, MassMode::closed, 2)) > 0);
  // w sits on the K_0 ray, so its bump feeds both incident wedges.
  const int n = fan.partition.size();
  CHECK(sgn(mass(fam.measures[fan.w_anchor], fan.partition.regions[0], MassMode::closed, 2)) > 0);
  CHECK(sgn(mass(fam.measures[fan.w_anchor], fan.partition.regions[n - 1], MassMode::closed, 2)) >
        0);
}

TEST_CASE("hypothesis violations are named") {
  MeasureFamily fam = gen_random_family(2, 4, 11);
  CHECK_THROWS_WITH_AS(build_fan(fam, 2, 4), "hypothesis violated: need m >= n(c-d)+d measures",
                       ParamError);
  CHECK_THROWS_AS(build_fan(fam, 1, 2), ParamError);
}
