#include "fairfan/measures.hpp"

#include <functional>

namespace fairfan {

Rat DiscreteMeasure::total() const {
  Rat t = 0;
  for (const auto& a : atoms) t += a.weight;
  return t;
}

void DiscreteMeasure::validate(int dim) const {
  if (sgn(bump_radius) <= 0) throw ParamError("bump_radius must be positive: " + label);
  if (atoms.empty()) throw ParamError("measure has no atoms: " + label);
  for (const auto& a : atoms) {
    if (static_cast<int>(a.pos.size()) != dim) throw ParamError("atom dimension mismatch: " + label);
    if (sgn(a.weight) <= 0) throw ParamError("atom weights must be positive: " + label);
  }
}

void MeasureFamily::validate() const {
  if (dim < 1) throw ParamError("family dimension must be >= 1");
  if (measures.empty()) throw ParamError("family has no measures");
  for (const auto& m : measures) m.validate(dim);
}

Rat mass(const DiscreteMeasure& m, const ConvexRegion& region, MassMode mode, int dim) {
  Rat s = 0;
  Rat r2 = m.bump_radius * m.bump_radius;
  for (const auto& a : m.atoms) {
    if (static_cast<int>(a.pos.size()) != dim) throw ParamError("dimension mismatch in mass");
    if (mode == MassMode::strict) {
      if (region.contains(a.pos)) s += a.weight;
    } else {
      if (dist2_point_region(a.pos, region) < r2) s += a.weight;
    }
  }
  return s;
}

MassMatrix evaluate_matrix(const MeasureFamily& family, const ConvexPartition& part) {
  const int n = part.size();
  MassMatrix mm;
  mm.entries.assign(family.size(), std::vector<Rat>(n, Rat(0)));
  mm.row_totals.resize(family.size());
  for (int j = 0; j < family.size(); ++j) {
    mm.row_totals[j] = family.measures[j].total();
    for (const auto& a : family.measures[j].atoms) {
      int home = -1;
      for (int i = 0; i < n; ++i)
        if (part.regions[i].contains(a.pos)) {
          home = i;
          break;
        }
      if (home < 0) throw GuaranteeError("atom not covered by the partition");
      mm.entries[j][home] += a.weight;
    }
  }
  return mm;
}

namespace {

void walk_cut_tree(const CutNode& node, int measure,
                   std::vector<std::pair<int, Rat>> carried,  // atom index, carried weight
                   const DiscreteMeasure& m, std::vector<Rat>& region_mass) {
  if (node.is_leaf) {
    for (const auto& [atom, w] : carried) region_mass[node.region] += w;
    return;
  }
  std::vector<std::pair<int, Rat>> left, right;
  for (const auto& [atom, w] : carried) {
    int s = node.cut.line.side(m.atoms[atom].pos);
    if (s > 0) {
      left.emplace_back(atom, w);
    } else if (s < 0) {
      right.emplace_back(atom, w);
    } else {
      auto it = node.cut.boundary_assignment.find({measure, atom});
      if (it == node.cut.boundary_assignment.end())
        throw GuaranteeError("boundary atom missing a share assignment");
      // Shares are absolute at cut time; carried weight splits proportionally.
      Rat denom = it->second.first + it->second.second;
      if (sgn(it->second.first) > 0) left.emplace_back(atom, w * it->second.first / denom);
      if (sgn(it->second.second) > 0) right.emplace_back(atom, w * it->second.second / denom);
    }
  }
  walk_cut_tree(*node.left, measure, std::move(left), m, region_mass);
  walk_cut_tree(*node.right, measure, std::move(right), m, region_mass);
}

}  // namespace

MassMatrix evaluate_matrix_shares(const MeasureFamily& family, const ConvexPartition& part) {
  if (!part.cut_tree) return evaluate_matrix(family, part);
  MassMatrix mm;
  mm.entries.assign(family.size(), std::vector<Rat>(part.size(), Rat(0)));
  mm.row_totals.resize(family.size());
  for (int j = 0; j < family.size(); ++j) {
    const auto& m = family.measures[j];
    mm.row_totals[j] = m.total();
    std::vector<std::pair<int, Rat>> carried;
    for (size_t a = 0; a < m.atoms.size(); ++a) carried.emplace_back(static_cast<int>(a), m.atoms[a].weight);
    walk_cut_tree(*part.cut_tree, j, std::move(carried), m, mm.entries[j]);
  }
  return mm;
}

std::vector<int> coverage_counts(const MeasureFamily& family, const ConvexPartition& part,
                                 const Rat& tau) {
  if (sgn(tau) < 0) throw ParamError("coverage threshold must be >= 0");
  std::vector<int> counts(part.size(), 0);
  for (int i = 0; i < part.size(); ++i)
    for (const auto& m : family.measures)
      if (mass(m, part.regions[i], MassMode::closed, family.dim) > tau) ++counts[i];
  return counts;
}

Rat default_bump_radius(const MeasureFamily& family) {
  bool found = false;
  Rat min_d2;
  std::vector<const Atom*> all;
  for (const auto& m : family.measures)
    for (const auto& a : m.atoms) all.push_back(&a);
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) {
      Rat d2 = norm2(sub(all[i]->pos, all[j]->pos));
      if (sgn(d2) == 0) throw ParamError("coincident atoms have no positive bump radius");
      if (!found || d2 < min_d2) min_d2 = d2, found = true;
    }
  if (!found) return Rat(1);
  return rational_sqrt_lower(min_d2 / 16);
}

}  // namespace fairfan
