#include <doctest.h>

#include "fairfan/hamsandwich.hpp"
#include "fairfan/instances.hpp"
#include "fairfan/json_io.hpp"
#include "fairfan/measures.hpp"

using namespace fairfan;

namespace {

DiscreteMeasure unit_atom(long x, long y, const char* label) {
  DiscreteMeasure m;
  m.label = label;
  m.bump_radius = rat(1, 4);
  m.atoms.push_back({Point{Rat(x), Rat(y)}, Rat(1)});
  return m;
}

ConvexRegion halfplane_x(int side) {
  ConvexRegion r;
  r.halves.push_back({Hyperplane{Vec{Rat(1), Rat(0)}, Rat(0)}, side});
  return r;
}

}  // namespace

TEST_CASE("closed-mode mass counts bump balls against region interiors") {
  DiscreteMeasure m = unit_atom(0, 0, "m");
  CHECK(mass(m, halfplane_x(+1), MassMode::closed, 2) == Rat(1));
  // Boundary atom: the bump meets both open sides.
  CHECK(mass(m, halfplane_x(-1), MassMode::closed, 2) == Rat(1));
  ConvexRegion far;
  far.halves.push_back({Hyperplane{Vec{Rat(1), Rat(0)}, Rat(100)}, +1});
  CHECK(mass(m, far, MassMode::closed, 2) == Rat(0));
  CHECK(mass(m, far, MassMode::strict, 2) == Rat(0));
}

TEST_CASE("single-region matrix equals row totals") {
  MeasureFamily fam;
  fam.dim = 2;
  fam.measures.push_back(unit_atom(1, 2, "a"));
  fam.measures[0].atoms.push_back({Point{Rat(3), Rat(4)}, Rat(5)});
  ConvexPartition whole;
  whole.dim = 2;
  whole.regions.push_back(ConvexRegion{});
  MassMatrix mm = evaluate_matrix(fam, whole);
  CHECK(mm.entries[0][0] == Rat(6));
  CHECK(mm.row_totals[0] == Rat(6));
}

TEST_CASE("two half-planes split a symmetric measure in half") {
  MeasureFamily fam;
  fam.dim = 2;
  DiscreteMeasure m = unit_atom(-1, 0, "sym");
  m.atoms.push_back({Point{Rat(1), Rat(0)}, Rat(1)});
  fam.measures.push_back(m);
  ConvexPartition part;
  part.dim = 2;
  part.regions.push_back(halfplane_x(-1));
  part.regions.push_back(halfplane_x(+1));
  MassMatrix mm = evaluate_matrix(fam, part);
  CHECK(mm.entries[0][0] == Rat(1));
  CHECK(mm.entries[0][1] == Rat(1));
}

TEST_CASE("strict rows sum to totals exactly on random instances") {
  for (uint64_t seed : {1u, 2u, 3u}) {
    MeasureFamily fam = gen_random_family(2, 5, seed);
    auto part = equipartition_2pow(fam.measures[0], fam.measures[1], 2);
    MassMatrix mm = evaluate_matrix(fam, part);
    for (int j = 0; j < fam.size(); ++j) {
      Rat sum = 0;
      for (const Rat& x : mm.entries[j]) sum += x;
      CHECK(sum == mm.row_totals[j]);
      // Direct summation oracle.
      CHECK(mm.row_totals[j] == fam.measures[j].total());
    }
  }
}

TEST_CASE("closed-mode dominates strict mode and scaling is linear") {
  MeasureFamily fam = gen_random_family(2, 4, 9);
  auto part = equipartition_2pow(fam.measures[0], fam.measures[1], 1);
  for (const auto& m : fam.measures)
    for (const auto& region : part.regions) {
      Rat closed = mass(m, region, MassMode::closed, 2);
      Rat strict = mass(m, region, MassMode::strict, 2);
      CHECK(closed >= strict);
      DiscreteMeasure scaled = m;
      for (auto& a : scaled.atoms) a.weight *= 7;
      CHECK(mass(scaled, region, MassMode::closed, 2) == closed * 7);
      CHECK(mass(scaled, region, MassMode::strict, 2) == strict * 7);
    }
  auto before = coverage_counts(fam, part, Rat(0));
  for (auto& m : fam.measures)
    for (auto& a : m.atoms) a.weight *= 3;
  CHECK(coverage_counts(fam, part, Rat(0)) == before);
}

TEST_CASE("default bump radius stays below the quarter gap") {
  MeasureFamily fam = gen_random_family(2, 4, 77);
  Rat r = default_bump_radius(fam);
  CHECK(sgn(r) > 0);
  Rat min_d2;
  bool found = false;
  std::vector<Point> centers;
  for (const auto& m : fam.measures)
    for (const auto& a : m.atoms) centers.push_back(a.pos);
  for (size_t i = 0; i < centers.size(); ++i)
    for (size_t j = i + 1; j < centers.size(); ++j) {
      Rat d2 = norm2(sub(centers[i], centers[j]));
      if (!found || d2 < min_d2) min_d2 = d2, found = true;
    }
  CHECK(r * r * 16 <= min_d2);
}

TEST_CASE("coverage counts against thresholds") {
  MeasureFamily fam;
  fam.dim = 2;
  fam.measures.push_back(unit_atom(-5, 0, "left"));
  fam.measures.push_back(unit_atom(-3, 1, "left2"));
  ConvexPartition part;
  part.dim = 2;
  part.regions.push_back(halfplane_x(-1));
  part.regions.push_back(halfplane_x(+1));
  auto counts = coverage_counts(fam, part, Rat(0));
  CHECK(counts[0] == 2);
  CHECK(counts[1] == 0);
}
