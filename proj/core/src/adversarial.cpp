#include "fairfan/adversarial.hpp"

#include "fairfan/hamsandwich.hpp"

namespace fairfan {

namespace {

Rat min_pairwise_dist2(const std::vector<Point>& centers) {
  Rat best;
  bool found = false;
  for (size_t i = 0; i < centers.size(); ++i)
    for (size_t j = i + 1; j < centers.size(); ++j) {
      Rat d2 = norm2(sub(centers[i], centers[j]));
      if (sgn(d2) == 0) throw ParamError("coincident bump centers");
      if (!found || d2 < best) best = d2, found = true;
    }
  return found ? best : Rat(1);
}

Point axis_point(int d, int axis, long value) {
  Point p(d, Rat(0));
  p[axis] = value;
  return p;
}

// d-1 affinely independent rational vertices centered at -e_d inside
// -e_d + span(e_1..e_{d-2}); regular for d <= 3, corner simplex beyond.
std::vector<Point> simplex_vertices(int d) {
  std::vector<Point> verts;
  if (d == 1) return verts;
  if (d == 2) {
    verts.push_back(axis_point(2, 1, -1));
    return verts;
  }
  if (d == 3) {
    Point a = axis_point(3, 2, -1), b = axis_point(3, 2, -1);
    a[0] = 1;
    b[0] = -1;
    verts.push_back(a);
    verts.push_back(b);
    return verts;
  }
  std::vector<Point> raw;
  raw.push_back(Point(d, Rat(0)));
  for (int k = 0; k < d - 2; ++k) raw.push_back(axis_point(d, k, 1));
  Point centroid(d, Rat(0));
  for (const auto& p : raw) centroid = add(centroid, p);
  centroid = scale(centroid, rat(1, d - 1));
  for (auto& p : raw) {
    Point v = sub(p, centroid);
    v[d - 1] -= 1;
    verts.push_back(v);
  }
  return verts;
}

}  // namespace

MeasureFamily gen_adversarial(int d, int n, int c) {
  if (d < 1 || n < 2 || c < d) throw ParamError("adversarial generator needs d >= 1, n >= 2, c >= d");
  const int m = n * (c - d) + d - 1;
  if (m < 1) throw ParamError("adversarial family would be empty (c = d = 1)");

  std::vector<Point> centers;
  std::vector<std::string> labels;
  if (d == 1) {
    for (int j = 0; j < m; ++j) {
      centers.push_back(Point{Rat(j + 1)});
      labels.push_back("line-" + std::to_string(j + 1));
    }
  } else {
    int line_count = m - d + 1;
    for (const auto& v : simplex_vertices(d)) centers.push_back(v);
    for (int k = 0; k < d - 1; ++k) labels.push_back("simplex-" + std::to_string(k + 1));
    for (int j = 0; j < line_count; ++j) {
      Point p(d, Rat(0));
      p[d - 1] = 1;
      p[d - 2] = j + 1;
      centers.push_back(p);
      labels.push_back("line-" + std::to_string(j + 1));
    }
  }

  Rat radius = centers.size() >= 2 ? rational_sqrt_lower(min_pairwise_dist2(centers) / 64) : rat(1, 8);
  MeasureFamily fam;
  fam.dim = d;
  for (size_t j = 0; j < centers.size(); ++j) {
    DiscreteMeasure meas;
    meas.label = labels[j];
    meas.bump_radius = radius;
    meas.atoms.push_back({centers[j], Rat(1)});
    fam.measures.push_back(std::move(meas));
  }
  fam.validate();
  return fam;
}

bool oracle_1d(int m_bumps, int n, int c) {
  if (m_bumps < 1 || n < 1 || c < 1) throw ParamError("oracle_1d needs positive parameters");
  // dp[k][i]: the first k intervals end at bump i (interval k covers some
  // [s, i] with i-s+1 >= c, interval k-1 ending at s or s-1).
  std::vector<std::vector<char>> dp(n + 1, std::vector<char>(m_bumps + 1, 0));
  for (int i = c; i <= m_bumps; ++i) dp[1][i] = 1;
  for (int k = 2; k <= n; ++k)
    for (int i = 1; i <= m_bumps; ++i)
      for (int s = 1; s + c - 1 <= i; ++s) {
        if (dp[k - 1][s] || (s >= 2 && dp[k - 1][s - 1])) {
          dp[k][i] = 1;
          break;
        }
      }
  return dp[n][m_bumps] != 0;
}

AdversarialReport verify_adversarial(const MeasureFamily& family,
                                     const std::vector<ConvexPartition>& candidates, int c) {
  const int d = family.dim;
  AdversarialReport report;
  for (const auto& part : candidates) {
    AdversarialWitness w;
    w.equiparts = true;
    for (int j = 0; j < d - 1; ++j) {
      const auto& meas = family.measures[j];
      Rat each = meas.total() / part.size();
      std::vector<Rat> masses;
      if (part.cut_tree) {
        masses = region_masses_for(part, tag_measure(meas, j));
      } else {
        MassMatrix mm = evaluate_matrix(family, part);
        masses = mm.entries[j];
      }
      for (int i = 0; i < part.size(); ++i)
        if (masses[i] != each) w.equiparts = false;
    }
    if (w.equiparts) {
      ++report.candidates_checked;
      auto counts = coverage_counts(family, part, Rat(0));
      int arg = 0;
      for (int i = 1; i < part.size(); ++i)
        if (counts[i] < counts[arg]) arg = i;
      w.witness_region = arg;
      w.witness_coverage = counts[arg];
      if (counts[arg] >= c) report.counterexample_free = false;
    }
    report.entries.push_back(w);
  }
  return report;
}

}  // namespace fairfan
