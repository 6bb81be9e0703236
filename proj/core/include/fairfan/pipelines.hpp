#pragma once

#include <optional>

#include "fairfan/hamsandwich.hpp"

namespace fairfan {

// Normalized sum of a subset of a family's measures: each source contributes
// total mass exactly 1. Result atoms keep their source identities so cut
// trees can be replayed per source.
struct AggregateMeasure {
  std::vector<int> source_indices;
  bool normalized = true;
  DiscreteMeasure result;
  std::vector<TaggedAtom> tagged;  // weights scaled by 1/source total
};

AggregateMeasure build_nu(const MeasureFamily& family, const std::vector<int>& indices);

// If sum(xs) >= r-1+eps*(m-r+1) with xs in [0,1], returns the indices of the
// r largest entries (ties by index), each >= eps; otherwise nullopt.
std::optional<std::vector<int>> pigeonhole_indices(const std::vector<Rat>& xs, int r,
                                                   const Rat& eps);

struct EpsilonBound {
  Rat epsilon;      // 1 / (n ((n-1)(ceil(c/d)-1) + 1))
  Rat floor_bound;  // d / (c n^2)
};

EpsilonBound epsilon_bound(int n, int c, int d);

struct GroupPlan {
  std::vector<std::vector<int>> groups;  // d disjoint measure index sets
  std::vector<int> quotas;               // r_k, sum = c
  std::vector<int> sizes;                // m_k = |groups[k]|
};

// Quota split r_k in {floor(c/d), ceil(c/d)} with the larger quotas on the
// lowest group indices; sizes m_k = n(r_k-1)+1 summing to m = n(c-d)+d.
GroupPlan plan_epsilon_groups(int m, int n, int c, int d);

struct AlphaPlan {
  GroupPlan plan;
  Rat ratio;         // (1-alpha) / (1/n - alpha)
  Int required_m;    // sum of the group sizes: what the plan actually uses
  Int sufficient_m;  // the closed-form bound; required_m <= sufficient_m
  bool integer_ratio = false;
};

// Quotas r_k >= 2 summing to c with sizes m_k = ceil((r_k-1)*ratio); when the
// ratio is an integer the ceiling is exact and sum m_k = (c-d)*ratio.
AlphaPlan plan_alpha_groups(int n, int c, int d, const Rat& alpha);

enum class Theorem5Proof { point_measure, nu_measure };

struct RegionCoverage {
  int coverage = 0;                  // closed-mode count at tau = 0
  Rat aux_mass;                      // auxiliary measure share
  Rat mu1_mass;                      // equiparted measure share
  std::vector<int> touched_sources;  // family indices with positive share
};

struct CoverageReport {
  std::vector<RegionCoverage> regions;
  bool all_covered = false;
  bool corollary_applicable = false;  // sources share one total
  bool corollary_holds = false;       // sum_{j>=d} and the full sum equipart
};

struct Theorem5Result {
  ConvexPartition partition;
  CoverageReport report;
};

// Both proofs of the exact-m theorem in the plane: equiparts mu_1 together
// with an auxiliary measure (anchor point measure V, or nu), then counts
// touched supports per region. Requires d = 2, m = n(c-2)+2, n a power of 2.
Theorem5Result theorem5_pipeline(const MeasureFamily& family, int n, int c, Theorem5Proof proof);

struct FractionCertificate {
  std::vector<Rat> group_hypothesis;        // nu_k(C_i) = m_k/n
  std::vector<int> certified;               // measure indices
  std::vector<Rat> fractions;               // matching certified
};

struct FractionReport {
  Rat threshold;  // epsilon or alpha
  std::vector<FractionCertificate> regions;
  bool all_certified = false;
};

struct FractionResult {
  ConvexPartition partition;
  FractionReport report;
};

struct FractionTarget {
  bool use_alpha = false;
  Rat alpha;  // only when use_alpha
};

// Equiparts (nu_1, nu_2) and certifies, per region, >= c measures holding at
// least the target fraction of their totals via the pigeonhole step.
FractionResult fraction_pipeline(const MeasureFamily& family, int n, int c,
                                 const GroupPlan& plan, const FractionTarget& target);

bool is_power_of_two(int n);

}  // namespace fairfan
