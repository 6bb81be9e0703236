#pragma once

#include "fairfan/measures.hpp"

namespace fairfan {

// Planar atoms tagged with their owning (measure, atom) identity so that
// boundary shares recorded at cut time can be replayed for any measure
// family sharing those identities.
struct TaggedAtom {
  int measure, atom;
  Vec2q pos;
  Rat weight;
};

// Exact discrete ham-sandwich cut: a line plus fractional assignment of the
// on-line atoms such that each open side plus its shares holds exactly half
// of each of the two measures. Boundary shares are absolute weights summing
// to the atom's weight. Among all valid cut lines through two atoms, the one
// with the lexicographically smallest defining index pair is returned.
SplitCut ham_sandwich_cut(const DiscreteMeasure& red, const DiscreteMeasure& blue);

// Recursive ham-sandwich equipartition into n = 2^k convex cells, each
// holding exactly total/2^k of both atom lists (share accounting included).
// Cells are intersections of at most k half-planes; the cut tree is attached
// as provenance.
ConvexPartition equipartition_2pow_tagged(const std::vector<TaggedAtom>& a,
                                          const std::vector<TaggedAtom>& b, int k);

ConvexPartition equipartition_2pow(const DiscreteMeasure& red, const DiscreteMeasure& blue, int k);

std::vector<TaggedAtom> tag_measure(const DiscreteMeasure& m, int measure_index);

// Exact per-tag-measure region masses implied by a cut tree, replayed over
// the given tagged atoms. Row index = position in `atoms_by_measure`.
std::vector<Rat> region_masses_for(const ConvexPartition& part,
                                   const std::vector<TaggedAtom>& atoms);

}  // namespace fairfan
