#pragma once

#include <string>
#include <vector>

#include "fairfan/partition.hpp"

namespace fairfan {

struct Atom {
  Point pos;
  Rat weight;
};

// Weighted atom cloud standing in for a positive finite absolutely
// continuous measure; each atom carries an open bump ball of the measure's
// bump_radius, so "support" means the union of those balls.
struct DiscreteMeasure {
  std::string label;
  Rat bump_radius;
  std::vector<Atom> atoms;

  Rat total() const;
  void validate(int dim) const;
};

struct MeasureFamily {
  int dim = 0;
  std::vector<DiscreteMeasure> measures;

  int size() const { return static_cast<int>(measures.size()); }
  void validate() const;
};

enum class MassMode { strict, closed };

// Per-measure per-region masses. Strict entries follow the half-open rule
// (a boundary atom belongs to the lowest containing region index), so each
// row sums exactly to the measure's total.
struct MassMatrix {
  std::vector<std::vector<Rat>> entries;  // m x n
  std::vector<Rat> row_totals;
};

// closed: weights of atoms whose open bump ball meets the region interior.
// strict: weights of atoms contained in the closed region (the half-open
// partition assignment lives in evaluate_matrix).
Rat mass(const DiscreteMeasure& m, const ConvexRegion& region, MassMode mode, int dim);

MassMatrix evaluate_matrix(const MeasureFamily& family, const ConvexPartition& part);

// Mass matrix honouring the cut tree's fractional boundary shares; falls
// back to the half-open rule when the partition has no cut tree.
MassMatrix evaluate_matrix_shares(const MeasureFamily& family, const ConvexPartition& part);

// Per region, the number of measures with closed-mode mass > tau.
std::vector<int> coverage_counts(const MeasureFamily& family, const ConvexPartition& part,
                                 const Rat& tau);

// Largest exact rational at most a quarter of the minimum pairwise atom
// distance across the family; the default ingestion bump radius.
Rat default_bump_radius(const MeasureFamily& family);

}  // namespace fairfan
