#include "fairfan/pipelines.hpp"

#include <algorithm>
#include <numeric>

namespace fairfan {

bool is_power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }

AggregateMeasure build_nu(const MeasureFamily& family, const std::vector<int>& indices) {
  if (indices.empty()) throw ParamError("aggregate needs at least one source");
  AggregateMeasure agg;
  agg.source_indices = indices;
  agg.result.label = "nu";
  Rat min_radius;
  bool first = true;
  for (int j : indices) {
    const auto& m = family.measures.at(j);
    Rat total = m.total();
    if (sgn(total) <= 0) throw ParamError("aggregate source has zero total mass: " + m.label);
    for (size_t a = 0; a < m.atoms.size(); ++a) {
      Rat w = m.atoms[a].weight / total;
      agg.result.atoms.push_back({m.atoms[a].pos, w});
      if (family.dim == 2)
        agg.tagged.push_back({j, static_cast<int>(a),
                              Vec2q{m.atoms[a].pos[0], m.atoms[a].pos[1]}, w});
    }
    if (first || m.bump_radius < min_radius) min_radius = m.bump_radius, first = false;
  }
  agg.result.bump_radius = min_radius;
  return agg;
}

std::optional<std::vector<int>> pigeonhole_indices(const std::vector<Rat>& xs, int r,
                                                   const Rat& eps) {
  const int m = static_cast<int>(xs.size());
  if (r < 1 || r > m) throw ParamError("pigeonhole rank out of range");
  Rat sum = 0;
  for (const Rat& x : xs) {
    if (sgn(x) < 0 || x > 1) throw ParamError("pigeonhole entries must lie in [0,1]");
    sum += x;
  }
  Rat threshold = Rat(r - 1) + eps * Rat(m - r + 1);
  if (sum < threshold) return std::nullopt;
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return xs[a] > xs[b]; });
  idx.resize(r);
  for (int i : idx)
    if (xs[i] < eps) throw GuaranteeError("pigeonhole conclusion violated");
  std::sort(idx.begin(), idx.end());
  return idx;
}

EpsilonBound epsilon_bound(int n, int c, int d) {
  if (n < 2 || d < 2 || c < d) throw ParamError("epsilon bound needs n >= 2, c >= d >= 2");
  long ceil_cd = (c + d - 1) / d;
  EpsilonBound b;
  b.epsilon = rat(1, n * ((n - 1) * (ceil_cd - 1) + 1));
  b.floor_bound = rat(d, static_cast<long>(c) * n * n);
  if (b.epsilon < b.floor_bound) throw GuaranteeError("epsilon fell below its floor bound");
  return b;
}

namespace {

// Quotas r_k >= lo summing to c, larger values on the lowest indices.
std::vector<int> split_quotas(int c, int d) {
  std::vector<int> r(d, c / d);
  for (int k = 0; k < c % d; ++k) ++r[k];
  return r;
}

}  // namespace

GroupPlan plan_epsilon_groups(int m, int n, int c, int d) {
  if (n < 2 || d < 2 || c < d) throw ParamError("group plan needs n >= 2, c >= d >= 2");
  if (m != n * (c - d) + d) throw ParamError("group plan requires m = n(c-d)+d");
  GroupPlan plan;
  plan.quotas = split_quotas(c, d);
  int next = 0;
  for (int k = 0; k < d; ++k) {
    int mk = n * (plan.quotas[k] - 1) + 1;
    plan.sizes.push_back(mk);
    std::vector<int> group(mk);
    std::iota(group.begin(), group.end(), next);
    next += mk;
    plan.groups.push_back(std::move(group));
  }
  if (next != m) throw GuaranteeError("group sizes do not exhaust the family");
  return plan;
}

AlphaPlan plan_alpha_groups(int n, int c, int d, const Rat& alpha) {
  if (n < 2 || d < 2) throw ParamError("alpha plan needs n >= 2, d >= 2");
  if (c < 2 * d) throw ParamError("alpha plan requires c >= 2d");
  if (sgn(alpha) <= 0 || alpha >= rat(1, n)) throw ParamError("alpha must lie in (0, 1/n)");
  AlphaPlan out;
  out.ratio = (Rat(1) - alpha) / (rat(1, n) - alpha);
  out.integer_ratio = is_integer(out.ratio);
  out.plan.quotas = split_quotas(c, d);
  for (int r : out.plan.quotas)
    if (r < 2) throw GuaranteeError("alpha quotas must be >= 2");
  int next = 0;
  Int sum = 0;
  for (int k = 0; k < d; ++k) {
    Int mk = rat_ceil(Rat(out.plan.quotas[k] - 1) * out.ratio);
    int mki = static_cast<int>(mk.get_si());
    out.plan.sizes.push_back(mki);
    std::vector<int> group(mki);
    std::iota(group.begin(), group.end(), next);
    next += mki;
    sum += mk;
    out.plan.groups.push_back(std::move(group));
  }
  out.required_m = sum;
  out.sufficient_m = out.integer_ratio ? Int(Rat(Rat(c - d) * out.ratio).get_num())
                                       : rat_ceil(Rat(c - d) * out.ratio + Rat(d - 1));
  if (out.required_m > out.sufficient_m)
    throw GuaranteeError("group sizes exceed the closed-form measure bound");
  return out;
}

namespace {

std::vector<Rat> slice_masses(const ConvexPartition& part, const std::vector<TaggedAtom>& all,
                              int source) {
  std::vector<TaggedAtom> slice;
  for (const auto& t : all)
    if (t.measure == source) slice.push_back(t);
  return region_masses_for(part, slice);
}

void require_planar_power_of_two(const MeasureFamily& family, int n) {
  if (family.dim != 2)
    throw ScopeLimitError("constructive pipelines are implemented for d = 2 only");
  if (!is_power_of_two(n))
    throw ScopeLimitError("constructive pipelines require n to be a power of two");
}

int log2_int(int n) {
  int k = 0;
  while ((1 << k) < n) ++k;
  return k;
}

}  // namespace

Theorem5Result theorem5_pipeline(const MeasureFamily& family, int n, int c,
                                 Theorem5Proof proof) {
  family.validate();
  require_planar_power_of_two(family, n);
  const int d = 2;
  const int m = family.size();
  if (n < 2 || c < d) throw ParamError("pipeline needs n >= 2 and c >= d");
  if (m != n * (c - d) + d) throw ParamError("pipeline requires m = n(c-d)+d");

  std::vector<int> sources(m - d + 1);
  std::iota(sources.begin(), sources.end(), d - 1);

  std::vector<TaggedAtom> aux;
  Rat aux_total;
  if (proof == Theorem5Proof::point_measure) {
    for (int j : sources) {
      const auto& meas = family.measures[j];
      size_t best = 0;
      for (size_t a = 1; a < meas.atoms.size(); ++a)
        if (meas.atoms[a].weight > meas.atoms[best].weight) best = a;
      aux.push_back({j, static_cast<int>(best),
                     Vec2q{meas.atoms[best].pos[0], meas.atoms[best].pos[1]}, Rat(1)});
    }
    aux_total = Rat(static_cast<long>(sources.size()));
  } else {
    AggregateMeasure nu = build_nu(family, sources);
    aux = nu.tagged;
    aux_total = Rat(static_cast<long>(sources.size()));
  }

  const int k = log2_int(n);
  auto mu1 = tag_measure(family.measures[0], 0);
  Theorem5Result res;
  res.partition = equipartition_2pow_tagged(mu1, aux, k);

  std::vector<Rat> mu1_masses = region_masses_for(res.partition, mu1);
  std::vector<Rat> aux_masses = region_masses_for(res.partition, aux);
  Rat mu1_each = family.measures[0].total() / n;
  Rat aux_each = aux_total / n;

  auto counts = coverage_counts(family, res.partition, Rat(0));
  res.report.all_covered = true;
  for (int i = 0; i < n; ++i) {
    RegionCoverage rc;
    rc.coverage = counts[i];
    rc.mu1_mass = mu1_masses[i];
    rc.aux_mass = aux_masses[i];
    if (rc.mu1_mass != mu1_each) throw GuaranteeError("mu_1 not exactly equiparted");
    if (rc.aux_mass != aux_each) throw GuaranteeError("auxiliary measure not exactly equiparted");
    res.report.regions.push_back(rc);
  }
  // Touched sources per region, each contributing at most 1 to the aux mass.
  for (int j : sources) {
    std::vector<Rat> per = slice_masses(res.partition, aux, j);
    for (int i = 0; i < n; ++i) {
      if (per[i] > 1) throw GuaranteeError("one source exceeded aux contribution 1");
      if (sgn(per[i]) > 0) res.report.regions[i].touched_sources.push_back(j);
    }
  }
  for (int i = 0; i < n; ++i) {
    int touched = static_cast<int>(res.report.regions[i].touched_sources.size());
    if (touched < c - d + 1)
      throw GuaranteeError("a region touches fewer than c-d+1 auxiliary supports");
    if (res.report.regions[i].coverage < c) res.report.all_covered = false;
  }

  // With equal source totals, the same cuts equipart the source sum and the
  // full sum (nu proof only; V shares do not track full source masses).
  if (proof == Theorem5Proof::nu_measure) {
    bool equal_totals = true;
    Rat t0 = family.measures[sources[0]].total();
    for (int j : sources)
      if (family.measures[j].total() != t0) equal_totals = false;
    res.report.corollary_applicable = equal_totals;
    if (equal_totals) {
      res.report.corollary_holds = true;
      for (int i = 0; i < n; ++i) {
        Rat sum_sources = res.report.regions[i].aux_mass * t0;
        Rat expected_sources = aux_each * t0;
        Rat full = sum_sources + res.report.regions[i].mu1_mass;
        Rat expected_full = expected_sources + mu1_each;
        if (sum_sources != expected_sources || full != expected_full)
          res.report.corollary_holds = false;
      }
    }
  }
  return res;
}

FractionResult fraction_pipeline(const MeasureFamily& family, int n, int c,
                                 const GroupPlan& plan, const FractionTarget& target) {
  family.validate();
  require_planar_power_of_two(family, n);
  if (plan.groups.size() != 2)
    throw ScopeLimitError("the fraction pipeline needs exactly d = 2 groups");
  for (const auto& g : plan.groups)
    for (int j : g)
      if (j < 0 || j >= family.size()) throw ParamError("group plan does not fit the family");

  Rat threshold = target.use_alpha ? target.alpha : epsilon_bound(n, c, 2).epsilon;

  AggregateMeasure nu1 = build_nu(family, plan.groups[0]);
  AggregateMeasure nu2 = build_nu(family, plan.groups[1]);
  const int k = log2_int(n);

  FractionResult res;
  res.partition = equipartition_2pow_tagged(nu1.tagged, nu2.tagged, k);
  res.report.threshold = threshold;
  res.report.all_certified = true;

  for (int i = 0; i < n; ++i) res.report.regions.emplace_back();

  for (size_t g = 0; g < plan.groups.size(); ++g) {
    const auto& agg = (g == 0) ? nu1 : nu2;
    std::vector<Rat> group_mass = region_masses_for(res.partition, agg.tagged);
    Rat expected = rat(plan.sizes[g], n);
    std::vector<std::vector<Rat>> fractions(plan.groups[g].size());
    for (size_t s = 0; s < plan.groups[g].size(); ++s)
      fractions[s] = slice_masses(res.partition, agg.tagged, plan.groups[g][s]);
    for (int i = 0; i < n; ++i) {
      if (group_mass[i] != expected)
        throw GuaranteeError("group aggregate not exactly equiparted");
      res.report.regions[i].group_hypothesis.push_back(group_mass[i]);
      std::vector<Rat> xs;
      for (size_t s = 0; s < plan.groups[g].size(); ++s) xs.push_back(fractions[s][i]);
      auto picked = pigeonhole_indices(xs, plan.quotas[g], threshold);
      if (!picked) throw GuaranteeError("pigeonhole hypothesis failed for a group");
      for (int s : *picked) {
        res.report.regions[i].certified.push_back(plan.groups[g][s]);
        res.report.regions[i].fractions.push_back(xs[s]);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(res.report.regions[i].certified.size()) < c)
      res.report.all_certified = false;
  return res;
}

}  // namespace fairfan
