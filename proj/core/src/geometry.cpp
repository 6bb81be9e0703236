#include "fairfan/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fairfan {

std::string rat_to_string(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  std::string s = c.get_str();
  if (s.find('/') == std::string::npos) s += "/1";
  return s;
}

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw ParamError("bad rational literal: " + s);
  if (sgn(r.get_den()) == 0) throw ParamError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

Int rat_floor(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Int rat_ceil(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

bool is_integer(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  return c.get_den() == 1;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ParamError("dimension mismatch in dot");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ParamError("dimension mismatch in sub");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ParamError("dimension mismatch in add");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec scale(const Vec& a, const Rat& s) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

Rat norm2(const Vec& a) { return dot(a, a); }

bool is_zero(const Vec& a) {
  for (const Rat& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

Rat rational_sqrt_lower(const Rat& x) {
  if (sgn(x) < 0) throw ParamError("rational_sqrt_lower of negative value");
  const long k = 30;
  Int num = x.get_num(), den = x.get_den();
  Int scaled = (num << (2 * k)) / den;
  Int root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Rat r(root, Int(1) << k);
  r.canonicalize();
  return r;
}

int Hyperplane::side(const Point& p) const { return sgn(dot(normal, p) - offset); }

bool HalfSpace::contains(const Point& p) const {
  int s = plane.side(p);
  return side > 0 ? s >= 0 : s <= 0;
}

bool ConvexRegion::contains(const Point& p) const {
  for (const auto& h : halves)
    if (!h.contains(p)) return false;
  return true;
}

namespace {

// Sign of the determinant of a square rational matrix; destroys its argument.
int det_sign(std::vector<Vec>& m) {
  const size_t n = m.size();
  int s = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      s = -s;
    }
    if (sgn(m[col][col]) < 0) s = -s;
    for (size_t row = col + 1; row < n; ++row) {
      if (sgn(m[row][col]) == 0) continue;
      Rat f = m[row][col] / m[col][col];
      for (size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
    }
  }
  return s;
}

int matrix_rank(std::vector<Vec> m) {
  if (m.empty()) return 0;
  const size_t cols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < m.size(); ++col) {
    size_t pivot = rank;
    while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (size_t row = 0; row < m.size(); ++row) {
      if (row == rank || sgn(m[row][col]) == 0) continue;
      Rat f = m[row][col] / m[rank][col];
      for (size_t j = col; j < cols; ++j) m[row][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

// Solves A x = b by Gaussian elimination; nullopt if singular.
std::optional<Vec> solve_square(std::vector<Vec> a, Vec b) {
  const size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (size_t row = 0; row < n; ++row) {
      if (row == col || sgn(a[row][col]) == 0) continue;
      Rat f = a[row][col] / a[col][col];
      for (size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  Vec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::vector<Vec> difference_rows(const std::vector<Point>& pts) {
  std::vector<Vec> rows;
  rows.reserve(pts.size() > 0 ? pts.size() - 1 : 0);
  for (size_t i = 1; i < pts.size(); ++i) rows.push_back(sub(pts[i], pts[0]));
  return rows;
}

// Orthogonalizes vs against already-orthogonal basis; returns the residual.
Vec orthogonal_residual(const Vec& v, const std::vector<Vec>& basis) {
  Vec r = v;
  for (const Vec& b : basis) {
    Rat b2 = norm2(b);
    if (sgn(b2) == 0) continue;
    Rat f = dot(r, b) / b2;
    r = sub(r, scale(b, f));
  }
  return r;
}

}  // namespace

int orientation(const std::vector<Point>& pts) {
  if (pts.empty()) throw ParamError("orientation of empty point list");
  const size_t d = pts[0].size();
  if (pts.size() != d + 1) throw ParamError("orientation needs d+1 points");
  for (const auto& p : pts)
    if (p.size() != d) throw ParamError("dimension mismatch in orientation");
  std::vector<Vec> m = difference_rows(pts);
  return det_sign(m);
}

int affine_rank(const std::vector<Point>& pts) {
  if (pts.size() <= 1) return 0;
  return matrix_rank(difference_rows(pts));
}

bool affinely_independent(const std::vector<Point>& pts) {
  return affine_rank(pts) == static_cast<int>(pts.size()) - 1;
}

bool in_general_position(const std::vector<Point>& pts, int dim) {
  const size_t k = std::min(pts.size(), static_cast<size_t>(dim) + 1);
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<Point> sub;
    sub.reserve(k);
    for (int i : idx) sub.push_back(pts[i]);
    if (!affinely_independent(sub)) return false;
    int pos = static_cast<int>(k) - 1;
    while (pos >= 0 && idx[pos] == static_cast<int>(pts.size() - k + pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (size_t j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

std::vector<Point> perturb_to_general_position(const std::vector<Point>& pts, int dim,
                                               const std::vector<Rat>& max_disp2) {
  if (pts.size() != max_disp2.size()) throw ParamError("perturbation bounds mismatch");
  if (in_general_position(pts, dim)) return pts;

  // Moment-curve offsets break every affine degeneracy for all but finitely
  // many step sizes; halve until all subsets pass and offsets fit the bounds.
  std::vector<Vec> moment(pts.size(), Vec(dim));
  for (size_t j = 0; j < pts.size(); ++j) {
    Rat t(static_cast<long>(j + 1));
    Rat acc = t;
    for (int k = 0; k < dim; ++k) {
      moment[j][k] = acc;
      acc *= t;
    }
  }
  Rat bound2;
  bool have_bound = false;
  for (size_t j = 0; j < pts.size(); ++j) {
    Rat m2 = norm2(moment[j]);
    if (sgn(m2) == 0) continue;
    Rat b = max_disp2[j] / m2;
    if (!have_bound || b < bound2) {
      bound2 = b;
      have_bound = true;
    }
  }
  if (!have_bound) throw ParamError("cannot perturb a single degenerate point");
  Rat delta = rational_sqrt_lower(bound2);
  if (sgn(delta) == 0)
    throw ParamError("bump radius too small for perturbation; increase bump_radius");
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<Point> out(pts.size());
    for (size_t j = 0; j < pts.size(); ++j) out[j] = add(pts[j], scale(moment[j], delta));
    if (in_general_position(out, dim)) return out;
    delta /= 2;
  }
  throw ParamError("bump radius too small for perturbation; increase bump_radius");
}

Ridge find_ridge(const std::vector<Point>& pts, int dim) {
  if (dim < 2) throw ParamError("find_ridge requires dimension >= 2");
  if (pts.size() < static_cast<size_t>(dim)) throw ParamError("find_ridge needs at least d points");
  if (!in_general_position(pts, dim)) throw ParamError("find_ridge: points not in general position");

  Vec u(dim, Rat(0));
  u[0] = 1;
  auto support_set = [&](const Vec& normal) {
    Rat best = dot(normal, pts[0]);
    for (size_t i = 1; i < pts.size(); ++i) best = std::min(best, dot(normal, pts[i]));
    std::vector<int> t;
    for (size_t i = 0; i < pts.size(); ++i)
      if (dot(normal, pts[i]) == best) t.push_back(static_cast<int>(i));
    return t;
  };
  std::vector<int> T = support_set(u);

  while (static_cast<int>(T.size()) < dim - 1) {
    const Point& p0 = pts[T[0]];
    std::vector<Vec> frame;
    for (size_t i = 1; i < T.size(); ++i) {
      Vec r = orthogonal_residual(sub(pts[T[i]], p0), frame);
      if (!is_zero(r)) frame.push_back(r);
    }
    Vec ur = orthogonal_residual(u, frame);
    frame.push_back(ur);
    Vec z;
    for (int k = 0; k < dim; ++k) {
      Vec e(dim, Rat(0));
      e[k] = 1;
      Vec r = orthogonal_residual(e, frame);
      if (!is_zero(r)) {
        z = r;
        break;
      }
    }
    if (z.empty()) throw ParamError("find_ridge: rotation axis exhausted");

    bool any_pos = false, any_neg = false;
    Rat tpos, tneg;
    for (size_t q = 0; q < pts.size(); ++q) {
      if (std::find(T.begin(), T.end(), static_cast<int>(q)) != T.end()) continue;
      Rat aq = dot(z, sub(pts[q], p0));
      Rat bq = dot(u, sub(pts[q], p0));
      if (sgn(aq) > 0) {
        Rat t = bq / aq;
        if (!any_pos || t < tpos) tpos = t, any_pos = true;
      } else if (sgn(aq) < 0) {
        Rat t = bq / (-aq);
        if (!any_neg || t < tneg) tneg = t, any_neg = true;
      }
    }
    if (!any_pos && !any_neg) {
      // All points lie on the hyperplane normal to z through p0.
      u = z;
      if (sgn(dot(u, sub(pts[0], p0))) < 0)
        for (Rat& c : u) c = -c;
      T = support_set(u);
      break;
    }
    if (any_pos)
      u = sub(u, scale(z, tpos));
    else
      u = add(u, scale(z, tneg));
    T = support_set(u);
  }

  if (static_cast<int>(T.size()) > dim - 1) T.resize(dim - 1);
  std::sort(T.begin(), T.end());

  Ridge ridge;
  ridge.indices = T;
  ridge.flat.base = pts[T[0]];
  for (size_t i = 1; i < T.size(); ++i) ridge.flat.directions.push_back(sub(pts[T[i]], pts[T[0]]));
  ridge.support.normal = u;
  ridge.support.offset = dot(u, pts[T[0]]);
  for (const auto& p : pts)
    if (ridge.support.side(p) < 0) throw GuaranteeError("find_ridge: support hyperplane violated");
  return ridge;
}

Vec2q AngularProjection::project(const Point& p) const {
  Vec w = sub(p, origin);
  return Vec2q{dot(w, axis_u), dot(w, axis_v)};
}

Rat AngularProjection::metric_dist2(const Vec2q& a, const Vec2q& b) const {
  Rat ds = a.x - b.x, dt = a.y - b.y;
  return ds * ds / u_norm2 + dt * dt / v_norm2;
}

Rat AngularProjection::metric_bilinear(const Vec2q& a, const Vec2q& b) const {
  return a.x * b.x / u_norm2 + a.y * b.y / v_norm2;
}

Hyperplane AngularProjection::lift_line(const Vec2q& dir) const {
  Vec n = sub(scale(axis_v, dir.x), scale(axis_u, dir.y));
  return Hyperplane{n, dot(n, origin)};
}

AngularProjection project_about_flat(const std::vector<Point>& pts, const Flat& flat) {
  const int d = flat.ambient_dim();
  if (static_cast<int>(flat.directions.size()) != d - 2)
    throw ParamError("flat must have dimension d-2");
  std::vector<Vec> basis;
  for (const Vec& dir : flat.directions) {
    Vec r = orthogonal_residual(dir, basis);
    if (is_zero(r)) throw ParamError("flat directions linearly dependent");
    basis.push_back(r);
  }
  std::vector<Vec> comp;
  for (int k = 0; k < d && comp.size() < 2; ++k) {
    Vec e(d, Rat(0));
    e[k] = 1;
    Vec r = orthogonal_residual(e, basis);
    if (is_zero(r)) continue;
    basis.push_back(r);
    comp.push_back(r);
  }
  if (comp.size() != 2) throw ParamError("could not build projection plane");

  AngularProjection proj;
  proj.origin = flat.base;
  proj.axis_u = comp[0];
  proj.axis_v = comp[1];
  proj.u_norm2 = norm2(comp[0]);
  proj.v_norm2 = norm2(comp[1]);
  for (size_t i = 0; i < pts.size(); ++i) {
    Vec2q c = proj.project(pts[i]);
    if (is_zero2(c)) throw ParamError("point lies on the flat (radius 0)");
    double su = std::sqrt(proj.u_norm2.get_d());
    double sv = std::sqrt(proj.v_norm2.get_d());
    double tx = c.x.get_d() / su, ty = c.y.get_d() / sv;
    double ang = std::atan2(ty, tx);
    if (ang < 0) ang += 2 * M_PI;
    proj.images.push_back({static_cast<int>(i), c, ang, std::hypot(tx, ty)});
  }
  return proj;
}

namespace {

struct FmRow {
  Vec a;
  Rat rhs;  // <a, x> < rhs
};

std::optional<Vec> fm_solve(std::vector<FmRow> rows, int vars) {
  if (vars == 0) {
    for (const auto& r : rows)
      if (sgn(r.rhs) <= 0) return std::nullopt;
    return Vec{};
  }
  std::vector<FmRow> lower, upper, rest;
  for (auto& r : rows) {
    int s = sgn(r.a[vars - 1]);
    if (s > 0)
      upper.push_back(std::move(r));
    else if (s < 0)
      lower.push_back(std::move(r));
    else
      rest.push_back(std::move(r));
  }
  std::vector<FmRow> reduced = rest;
  for (auto& r : reduced) r.a.resize(vars - 1);
  for (const auto& up : upper)
    for (const auto& lo : lower) {
      // x < (up.rhs - rest_u)/cu and x > (rest_l - lo.rhs)/(-cl) combine.
      Rat cu = up.a[vars - 1], cl = -lo.a[vars - 1];
      FmRow row;
      row.a.resize(vars - 1);
      for (int j = 0; j < vars - 1; ++j) row.a[j] = up.a[j] * cl + lo.a[j] * cu;
      row.rhs = up.rhs * cl + lo.rhs * cu;
      reduced.push_back(std::move(row));
    }
  if (reduced.size() > 200000) throw ParamError("feasibility system too large");
  auto inner = fm_solve(reduced, vars - 1);
  if (!inner) return std::nullopt;
  Vec x = *inner;
  bool has_lo = false, has_up = false;
  Rat lo_v, up_v;
  for (const auto& r : upper) {
    Rat rest_v = 0;
    for (int j = 0; j < vars - 1; ++j) rest_v += r.a[j] * x[j];
    Rat b = (r.rhs - rest_v) / r.a[vars - 1];
    if (!has_up || b < up_v) up_v = b, has_up = true;
  }
  for (const auto& r : lower) {
    Rat rest_v = 0;
    for (int j = 0; j < vars - 1; ++j) rest_v += r.a[j] * x[j];
    Rat b = (r.rhs - rest_v) / r.a[vars - 1];
    if (!has_lo || b > lo_v) lo_v = b, has_lo = true;
  }
  Rat val;
  if (has_lo && has_up)
    val = (lo_v + up_v) / 2;
  else if (has_lo)
    val = lo_v + 1;
  else if (has_up)
    val = up_v - 1;
  else
    val = 0;
  x.push_back(val);
  return x;
}

}  // namespace

std::optional<Point> strict_interior_point(const ConvexRegion& region, int dim) {
  std::vector<FmRow> rows;
  for (const auto& h : region.halves) {
    FmRow r;
    if (h.side > 0) {
      r.a = scale(h.plane.normal, Rat(-1));
      r.rhs = -h.plane.offset;
    } else {
      r.a = h.plane.normal;
      r.rhs = h.plane.offset;
    }
    rows.push_back(std::move(r));
  }
  return fm_solve(std::move(rows), dim);
}

Rat dist2_point_region(const Point& p, const ConvexRegion& region) {
  if (region.contains(p)) return Rat(0);
  const int dim = static_cast<int>(p.size());
  // Normalize to <n, x> <= b form.
  std::vector<Vec> normals;
  std::vector<Rat> rhs;
  for (const auto& h : region.halves) {
    if (h.side > 0) {
      normals.push_back(scale(h.plane.normal, Rat(-1)));
      rhs.push_back(-h.plane.offset);
    } else {
      normals.push_back(h.plane.normal);
      rhs.push_back(h.plane.offset);
    }
  }
  const size_t k = normals.size();
  bool found = false;
  Rat best;
  // The closest point lies on the affine hull of some independent active set;
  // its projection there satisfies all constraints.
  for (size_t mask = 1; mask < (size_t{1} << k); ++mask) {
    std::vector<int> sel;
    for (size_t i = 0; i < k; ++i)
      if (mask & (size_t{1} << i)) sel.push_back(static_cast<int>(i));
    if (static_cast<int>(sel.size()) > dim) continue;
    std::vector<Vec> gram(sel.size(), Vec(sel.size()));
    Vec target(sel.size());
    for (size_t i = 0; i < sel.size(); ++i) {
      for (size_t j = 0; j < sel.size(); ++j) gram[i][j] = dot(normals[sel[i]], normals[sel[j]]);
      target[i] = rhs[sel[i]] - dot(normals[sel[i]], p);
    }
    auto lambda = solve_square(gram, target);
    if (!lambda) continue;
    Point x = p;
    for (size_t i = 0; i < sel.size(); ++i) x = add(x, scale(normals[sel[i]], (*lambda)[i]));
    if (!region.contains(x)) continue;
    Rat d2 = norm2(sub(x, p));
    if (!found || d2 < best) best = d2, found = true;
  }
  if (!found) throw GuaranteeError("dist2_point_region: region appears empty");
  return best;
}

}  // namespace fairfan
