#include "fairfan/instances.hpp"

#include <algorithm>
#include <set>

#include "fairfan/hamsandwich.hpp"

namespace fairfan {

uint64_t Rng::next() {
  // splitmix64
  state += 0x9e3779b97f4a7c15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

long Rng::below(long n) { return static_cast<long>(next() % static_cast<uint64_t>(n)); }

long Rng::range(long lo, long hi) { return lo + below(hi - lo + 1); }

MeasureFamily gen_random_family(int d, int m, uint64_t seed, int atoms_per_measure) {
  if (d < 1 || m < 1 || atoms_per_measure < 1) throw ParamError("bad random family parameters");
  Rng rng(seed);
  MeasureFamily fam;
  fam.dim = d;
  std::set<std::vector<long>> used;
  for (int j = 0; j < m; ++j) {
    DiscreteMeasure meas;
    meas.label = "mu-" + std::to_string(j + 1);
    meas.bump_radius = 1;  // replaced by the quarter-gap default below
    for (int a = 0; a < atoms_per_measure; ++a) {
      std::vector<long> raw(d);
      do {
        for (int k = 0; k < d; ++k) raw[k] = rng.range(-4096, 4096);
      } while (!used.insert(raw).second);
      Point p(d);
      for (int k = 0; k < d; ++k) p[k] = Rat(raw[k]);
      meas.atoms.push_back({p, Rat(rng.range(1, 16))});
    }
    fam.measures.push_back(std::move(meas));
  }
  Rat radius = default_bump_radius(fam);
  for (auto& meas : fam.measures) meas.bump_radius = radius;
  fam.validate();
  return fam;
}

ConvexPartition random_interval_partition(const MeasureFamily& family, int n, Rng& rng) {
  if (family.dim != 1) throw ParamError("interval partitions need d = 1");
  std::vector<Rat> xs;
  for (const auto& m : family.measures)
    for (const auto& a : m.atoms) xs.push_back(a.pos[0]);
  std::sort(xs.begin(), xs.end());
  Rat lo = xs.front() - 1, hi = xs.back() + 1;
  std::vector<Rat> cuts;
  for (int i = 0; i < n - 1; ++i) {
    if (rng.below(4) == 0) {
      cuts.push_back(xs[rng.below(static_cast<long>(xs.size()))]);  // land on an atom
    } else {
      long denom = rng.range(7, 64);
      long span = static_cast<long>(rat_ceil((hi - lo) * denom).get_si());
      cuts.push_back(lo + rat(rng.below(span + 1), denom));
    }
  }
  std::sort(cuts.begin(), cuts.end());
  ConvexPartition part;
  part.dim = 1;
  // Degenerate duplicate cuts would create empty interiors; nudge them apart.
  for (size_t i = 1; i < cuts.size(); ++i)
    if (cuts[i] <= cuts[i - 1]) cuts[i] = cuts[i - 1] + rat(1, 97 + static_cast<long>(i));
  for (int i = 0; i < n; ++i) {
    ConvexRegion r;
    if (i > 0) r.halves.push_back({Hyperplane{Vec{Rat(1)}, cuts[i - 1]}, +1});
    if (i < n - 1) r.halves.push_back({Hyperplane{Vec{Rat(1)}, cuts[i]}, -1});
    part.regions.push_back(std::move(r));
  }
  return part;
}

ConvexPartition random_equiparting_partition(const MeasureFamily& family, int n, Rng& rng) {
  if (family.dim != 2) throw ParamError("equiparting candidates need d = 2");
  int k = 0;
  while ((1 << k) < n) ++k;
  if ((1 << k) != n) throw ParamError("candidate generator needs n = 2^k");
  std::vector<TaggedAtom> aux;
  int count = static_cast<int>(rng.range(3, 9));
  for (int a = 0; a < count; ++a)
    aux.push_back({-1, a, Vec2q{Rat(rng.range(-4096, 4096)), Rat(rng.range(-4096, 4096))},
                   Rat(rng.range(1, 9))});
  return equipartition_2pow_tagged(tag_measure(family.measures[0], 0), aux, k);
}

}  // namespace fairfan
