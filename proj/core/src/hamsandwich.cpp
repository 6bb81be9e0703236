#include "fairfan/hamsandwich.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

namespace fairfan {

namespace {

struct CutSearchResult {
  SplitCut cut;
  Vec2q dir;     // line direction; left side is cross(dir, x - p) > 0
  Vec2q anchor;  // a point on the line
};

Point to_point(const Vec2q& v) { return Point{v.x, v.y}; }

Hyperplane line_through(const Vec2q& p, const Vec2q& dir) {
  Vec2q n = perp(dir);
  return Hyperplane{Vec{n.x, n.y}, n.x * p.x + n.y * p.y};
}

// Canonical representative of the undirected direction of v (upper half).
Vec2q canonical_dir(const Vec2q& v) {
  int s = sgn(v.y);
  if (s < 0 || (s == 0 && sgn(v.x) < 0)) return Vec2q{-v.x, -v.y};
  return v;
}

struct HalfMasses {
  Rat left[2] = {Rat(0), Rat(0)};
  Rat on[2] = {Rat(0), Rat(0)};
};

// Assigns left/right shares to the on-line atoms in ascending scan order so
// that each list's left side receives exactly half of its total.
void assign_shares(SplitCut& cut, const std::vector<const TaggedAtom*>& on_line,
                   const std::vector<int>& list_of, const Rat need_left[2]) {
  Rat remaining[2] = {need_left[0], need_left[1]};
  for (size_t i = 0; i < on_line.size(); ++i) {
    const TaggedAtom& a = *on_line[i];
    int l = list_of[i];
    Rat take = std::min(a.weight, remaining[l]);
    remaining[l] -= take;
    cut.boundary_assignment[{a.measure, a.atom}] = {take, a.weight - take};
  }
  if (sgn(remaining[0]) != 0 || sgn(remaining[1]) != 0)
    throw GuaranteeError("share assignment did not exhaust the target");
}

// Candidate cut lines pass through an anchor atom and at least one other
// atom; exact rotational sweep around each anchor in scan order yields the
// lexicographically smallest valid pair. `cell` (when set) additionally
// requires the line to leave nonempty interior on both sides of the cell.
// `skip` steps past that many acceptable candidates, in scan order, so the
// recursion can back away from choices whose subtree dies.
std::optional<CutSearchResult> find_cut(const std::vector<TaggedAtom>& la,
                                        const std::vector<TaggedAtom>& lb,
                                        const ConvexRegion* cell, int skip = 0) {
  std::vector<const TaggedAtom*> atoms;
  std::vector<int> list_of;
  for (const auto& a : la) atoms.push_back(&a), list_of.push_back(0);
  for (const auto& b : lb) atoms.push_back(&b), list_of.push_back(1);
  const int n = static_cast<int>(atoms.size());
  Rat half[2] = {Rat(0), Rat(0)};
  for (int i = 0; i < n; ++i) half[list_of[i]] += atoms[i]->weight;
  half[0] /= 2;
  half[1] /= 2;

  auto splits_cell = [&](const Vec2q& p, const Vec2q& dir) {
    if (!cell) return true;
    Hyperplane line = line_through(p, dir);
    for (int side : {+1, -1}) {
      ConvexRegion probe = *cell;
      probe.halves.push_back({line, side});
      if (!strict_interior_point(probe, 2)) return false;
    }
    return true;
  };

  auto finish = [&](const Vec2q& p, const Vec2q& dir, const HalfMasses& hm,
                    const std::vector<int>& on_idx) -> CutSearchResult {
    CutSearchResult res;
    res.dir = dir;
    res.anchor = p;
    res.cut.line = line_through(p, dir);
    std::vector<const TaggedAtom*> on_line;
    std::vector<int> on_list;
    for (int i : on_idx) on_line.push_back(atoms[i]), on_list.push_back(list_of[i]);
    Rat need[2] = {half[0] - hm.left[0], half[1] - hm.left[1]};
    assign_shares(res.cut, on_line, on_list, need);
    return res;
  };

  // All atoms at one position: any line through it is valid.
  bool all_same = true;
  for (int i = 1; i < n && all_same; ++i)
    if (sgn(atoms[i]->pos.x - atoms[0]->pos.x) != 0 || sgn(atoms[i]->pos.y - atoms[0]->pos.y) != 0)
      all_same = false;
  if (all_same) {
    for (Vec2q dir : {Vec2q{Rat(0), Rat(1)}, Vec2q{Rat(1), Rat(0)}, Vec2q{Rat(1), Rat(1)},
                      Vec2q{Rat(1), Rat(-1)}}) {
      if (!splits_cell(atoms[0]->pos, dir)) continue;
      if (skip-- > 0) continue;
      HalfMasses hm;
      std::vector<int> on_idx(n);
      for (int i = 0; i < n; ++i) on_idx[i] = i;
      return finish(atoms[0]->pos, dir, hm, on_idx);
    }
    return std::nullopt;
  }

  for (int i = 0; i < n; ++i) {
    const Vec2q& p = atoms[i]->pos;
    // Group the other atoms by the undirected direction they span with p.
    std::vector<int> others;
    std::vector<int> coincident;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      Vec2q v = sub2(atoms[j]->pos, p);
      if (is_zero2(v))
        coincident.push_back(j);
      else
        others.push_back(j);
    }
    if (others.empty()) continue;
    std::sort(others.begin(), others.end(), [&](int x, int y) {
      Vec2q a = canonical_dir(sub2(atoms[x]->pos, p));
      Vec2q b = canonical_dir(sub2(atoms[y]->pos, p));
      int s = sgn(cross(a, b));
      if (s != 0) return s > 0;
      return x < y;
    });
    std::vector<std::pair<Vec2q, std::vector<int>>> events;
    for (int j : others) {
      Vec2q cd = canonical_dir(sub2(atoms[j]->pos, p));
      if (!events.empty() && sgn(cross(events.back().first, cd)) == 0)
        events.back().second.push_back(j);
      else
        events.push_back({cd, {j}});
    }

    // Virtual pre-event sides at the first event direction.
    const Vec2q u0 = events[0].first;
    std::vector<int> side(n, 0);
    HalfMasses hm;
    hm.on[list_of[i]] += atoms[i]->weight;
    for (int j : coincident) hm.on[list_of[j]] += atoms[j]->weight;
    for (int j : others) {
      Vec2q v = sub2(atoms[j]->pos, p);
      int s = sgn(cross(u0, v));
      if (s == 0) s = sgn(dot2(u0, v));
      side[j] = s;
      if (s > 0) hm.left[list_of[j]] += atoms[j]->weight;
    }

    struct ValidEvent {
      int jmin;
      Vec2q dir;
      HalfMasses masses;
      std::vector<int> group;
    };
    std::vector<ValidEvent> valid_events;
    for (const auto& [dir, group] : events) {
      HalfMasses trial = hm;
      for (int j : group) {
        if (side[j] > 0) trial.left[list_of[j]] -= atoms[j]->weight;
        trial.on[list_of[j]] += atoms[j]->weight;
      }
      bool valid = true;
      for (int l = 0; l < 2; ++l)
        if (trial.left[l] > half[l] || trial.left[l] + trial.on[l] < half[l]) valid = false;
      if (valid)
        valid_events.push_back({*std::min_element(group.begin(), group.end()), dir, trial, group});
      for (int j : group) {
        if (side[j] > 0) hm.left[list_of[j]] -= atoms[j]->weight;
        side[j] = -side[j];
        if (side[j] > 0) hm.left[list_of[j]] += atoms[j]->weight;
      }
    }
    std::sort(valid_events.begin(), valid_events.end(),
              [](const ValidEvent& a, const ValidEvent& b) { return a.jmin < b.jmin; });
    for (const auto& ev : valid_events) {
      if (!splits_cell(p, ev.dir)) continue;
      if (skip-- > 0) continue;
      std::vector<int> on_idx = ev.group;
      on_idx.push_back(i);
      for (int j : coincident) on_idx.push_back(j);
      std::sort(on_idx.begin(), on_idx.end());
      return finish(p, ev.dir, ev.masses, on_idx);
    }
  }
  return std::nullopt;
}

// Candidates examined per node before declaring the cell degenerate.
constexpr int kCutSearchBudget = 64;

struct Builder {
  int k = 0;
  int next_region = 0;
  ConvexPartition part;

  std::unique_ptr<CutNode> build(const ConvexRegion& cell, std::vector<TaggedAtom> a,
                                 std::vector<TaggedAtom> b, int depth) {
    auto node = std::make_unique<CutNode>();
    if (depth == k) {
      node->is_leaf = true;
      node->region = next_region++;
      part.regions.push_back(cell);
      return node;
    }
    // Scan-order candidates; back away from a choice whose subtree has no
    // valid continuation (both sub-measures stranded on a cell boundary).
    for (int skip = 0; skip < kCutSearchBudget; ++skip) {
      auto found = find_cut(a, b, &cell, skip);
      if (!found)
        throw GuaranteeError(
            "no cut line splits this cell; input is degenerate for the atom-share model");
      node->cut = found->cut;
      const Hyperplane& line = node->cut.line;

      std::vector<TaggedAtom> al, ar, bl, br;
      auto split = [&](const std::vector<TaggedAtom>& src, std::vector<TaggedAtom>& left,
                       std::vector<TaggedAtom>& right) {
        for (const auto& atom : src) {
          int s = line.side(to_point(atom.pos));
          if (s > 0) {
            left.push_back(atom);
          } else if (s < 0) {
            right.push_back(atom);
          } else {
            auto it = node->cut.boundary_assignment.find({atom.measure, atom.atom});
            if (it == node->cut.boundary_assignment.end())
              throw GuaranteeError("on-line atom missing a boundary share");
            if (sgn(it->second.first) > 0) {
              TaggedAtom t = atom;
              t.weight = it->second.first;
              left.push_back(t);
            }
            if (sgn(it->second.second) > 0) {
              TaggedAtom t = atom;
              t.weight = it->second.second;
              right.push_back(t);
            }
          }
        }
      };
      split(a, al, ar);
      split(b, bl, br);

      ConvexRegion left_cell = cell, right_cell = cell;
      left_cell.halves.push_back({line, +1});
      right_cell.halves.push_back({line, -1});
      int saved_region = next_region;
      size_t saved_count = part.regions.size();
      try {
        node->left = build(left_cell, std::move(al), std::move(bl), depth + 1);
        node->right = build(right_cell, std::move(ar), std::move(br), depth + 1);
        return node;
      } catch (const GuaranteeError&) {
        next_region = saved_region;
        part.regions.resize(saved_count);
        node->left.reset();
        node->right.reset();
      }
    }
    throw GuaranteeError(
        "no cut line splits this cell; input is degenerate for the atom-share model");
  }
};

}  // namespace

std::vector<TaggedAtom> tag_measure(const DiscreteMeasure& m, int measure_index) {
  std::vector<TaggedAtom> out;
  for (size_t a = 0; a < m.atoms.size(); ++a) {
    if (m.atoms[a].pos.size() != 2) throw ParamError("planar engine requires d = 2");
    out.push_back({measure_index, static_cast<int>(a),
                   Vec2q{m.atoms[a].pos[0], m.atoms[a].pos[1]}, m.atoms[a].weight});
  }
  return out;
}

SplitCut ham_sandwich_cut(const DiscreteMeasure& red, const DiscreteMeasure& blue) {
  if (sgn(red.total()) <= 0 || sgn(blue.total()) <= 0)
    throw ParamError("ham-sandwich cut needs positive totals");
  auto found = find_cut(tag_measure(red, 0), tag_measure(blue, 1), nullptr);
  if (!found) throw GuaranteeError("no valid ham-sandwich cut found");
  return found->cut;
}

ConvexPartition equipartition_2pow_tagged(const std::vector<TaggedAtom>& a,
                                          const std::vector<TaggedAtom>& b, int k) {
  if (k < 0) throw ParamError("k must be >= 0");
  Builder builder;
  builder.k = k;
  builder.part.dim = 2;
  auto root = builder.build(ConvexRegion{}, a, b, 0);
  builder.part.cut_tree = std::shared_ptr<CutNode>(root.release());
  return std::move(builder.part);
}

ConvexPartition equipartition_2pow(const DiscreteMeasure& red, const DiscreteMeasure& blue,
                                   int k) {
  return equipartition_2pow_tagged(tag_measure(red, 0), tag_measure(blue, 1), k);
}

std::vector<Rat> region_masses_for(const ConvexPartition& part,
                                   const std::vector<TaggedAtom>& atoms) {
  if (!part.cut_tree) throw ParamError("partition has no cut tree");
  std::vector<Rat> masses(part.size(), Rat(0));
  struct Carried {
    const TaggedAtom* atom;
    Rat weight;
  };
  std::function<void(const CutNode&, std::vector<Carried>)> walk =
      [&](const CutNode& node, std::vector<Carried> carried) {
        if (node.is_leaf) {
          for (const auto& c : carried) masses[node.region] += c.weight;
          return;
        }
        std::vector<Carried> left, right;
        for (const auto& c : carried) {
          int s = node.cut.line.side(to_point(c.atom->pos));
          if (s > 0) {
            left.push_back(c);
          } else if (s < 0) {
            right.push_back(c);
          } else {
            auto it = node.cut.boundary_assignment.find({c.atom->measure, c.atom->atom});
            if (it == node.cut.boundary_assignment.end())
              throw GuaranteeError("on-line atom missing a boundary share");
            Rat denom = it->second.first + it->second.second;
            if (sgn(it->second.first) > 0)
              left.push_back({c.atom, c.weight * it->second.first / denom});
            if (sgn(it->second.second) > 0)
              right.push_back({c.atom, c.weight * it->second.second / denom});
          }
        }
        walk(*node.left, std::move(left));
        walk(*node.right, std::move(right));
      };
  std::vector<Carried> all;
  for (const auto& a : atoms) all.push_back({&a, a.weight});
  walk(*part.cut_tree, std::move(all));
  return masses;
}

}  // namespace fairfan
