#pragma once

#include "fairfan/measures.hpp"

namespace fairfan {

// Family of m = n(c-d)+d-1 bump measures defeating every convex partition
// that equiparts the first d-1 of them: d-1 simplex bumps (listed first)
// plus n(c-d) bumps strung along a line.
MeasureFamily gen_adversarial(int d, int n, int c);

// Feasibility of covering each of n consecutive intervals with >= c of m
// consecutive disjoint bumps on a line, adjacent intervals sharing at most
// one bump. Exhaustive DP; the closed form is m >= n(c-1)+1.
bool oracle_1d(int m_bumps, int n, int c);

struct AdversarialWitness {
  bool equiparts = false;   // candidate inside the theorem's quantifier
  int witness_region = -1;  // region with the lowest coverage
  int witness_coverage = 0;
};

struct AdversarialReport {
  std::vector<AdversarialWitness> entries;
  int candidates_checked = 0;  // candidates that equipart the simplex measures
  bool counterexample_free = true;
};

// Streams candidate partitions past the family: any candidate that equiparts
// the first d-1 measures must leave some region with coverage <= c-1; a
// candidate achieving >= c everywhere falsifies the bound and is reported.
AdversarialReport verify_adversarial(const MeasureFamily& family,
                                     const std::vector<ConvexPartition>& candidates, int c);

}  // namespace fairfan
