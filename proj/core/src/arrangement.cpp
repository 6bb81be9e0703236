#include "fairfan/arrangement.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <sstream>

namespace fairfan {

int ZeroPattern::zeros() const {
  int z = 0;
  for (uint32_t m : colmask) z += std::popcount(m);
  return z;
}

uint32_t ZeroPattern::support() const {
  uint32_t s = 0;
  for (int k = 0; k < cols; ++k)
    if (colmask[k]) s |= 1u << k;
  return s;
}

bool ZeroPattern::leq(const ZeroPattern& other) const {
  for (int k = 0; k < cols; ++k)
    if (colmask[k] & ~other.colmask[k]) return false;
  return true;
}

namespace {

struct Shape {
  int m, n, c, rows, min_zero, col_max;
};

Shape make_shape(int m, int n, int c, ArrangementVariant variant) {
  if (m < 2 || n < 1) throw ParamError("arrangement needs m >= 2, n >= 1");
  if (c < 2 || c > m) throw ParamError("arrangement needs 2 <= c <= m");
  Shape s;
  s.m = m;
  s.n = n;
  s.c = c;
  s.rows = (variant == ArrangementVariant::one_measure) ? m - 1 : m;
  s.min_zero = m - c + 1;
  // A full column kills the column-sum constraint in the tilde variant.
  s.col_max = (variant == ArrangementVariant::one_measure) ? s.rows : s.rows - 1;
  return s;
}

std::vector<uint32_t> column_choices(const Shape& s) {
  std::vector<uint32_t> masks{0};
  for (uint32_t mask = 1; mask < (1u << s.rows); ++mask) {
    int pc = std::popcount(mask);
    if (pc >= s.min_zero && pc <= s.col_max) masks.push_back(mask);
  }
  std::sort(masks.begin(), masks.end());
  return masks;
}

long long poset_cap() {
  if (const char* env = std::getenv("FAIRFAN_MAX_POSET")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 2000000;
}

uint64_t pattern_key(const ZeroPattern& p) {
  uint64_t key = 0;
  for (int k = 0; k < p.cols; ++k) key |= static_cast<uint64_t>(p.colmask[k]) << (p.rows * k);
  return key;
}

}  // namespace

IntersectionPoset build_poset(int m, int n, int c, ArrangementVariant variant) {
  Shape s = make_shape(m, n, c, variant);
  if (s.rows * n > 62) throw ScopeLimitError("arrangement too wide to materialize");
  const auto choices = column_choices(s);
  const long long cap = poset_cap();

  IntersectionPoset poset;
  poset.variant = variant;
  poset.m = m;
  poset.n = n;
  poset.c = c;
  poset.rows = s.rows;

  std::vector<uint32_t> current(n, 0);
  const uint32_t all_rows = (1u << s.rows) - 1;
  // A row dies only when it is zero in every column; empty columns clear the
  // running AND, so such patterns always pass the row check.
  auto emit = [&](auto&& self, int col, uint32_t and_mask, bool any) -> void {
    if (col == n) {
      if (!any || and_mask != 0) return;
      if (static_cast<long long>(poset.elements.size()) >= cap)
        throw ScopeLimitError("poset size cap exceeded (FAIRFAN_MAX_POSET)");
      ZeroPattern p;
      p.rows = s.rows;
      p.cols = n;
      p.colmask = current;
      poset.elements.push_back(std::move(p));
      return;
    }
    for (uint32_t mask : choices) {
      current[col] = mask;
      self(self, col + 1, and_mask & mask, any || mask != 0);
    }
  };
  emit(emit, 0, all_rows, false);

  std::sort(poset.elements.begin(), poset.elements.end(),
            [](const ZeroPattern& a, const ZeroPattern& b) {
              int za = a.zeros(), zb = b.zeros();
              if (za != zb) return za < zb;
              return a.colmask < b.colmask;
            });

  std::map<uint64_t, int> index;
  for (size_t i = 0; i < poset.elements.size(); ++i)
    index[pattern_key(poset.elements[i])] = static_cast<int>(i);

  for (size_t i = 0; i < poset.elements.size(); ++i) {
    const ZeroPattern& p = poset.elements[i];
    int nonempty = std::popcount(p.support());
    for (int k = 0; k < n; ++k) {
      uint32_t mask = p.colmask[k];
      if (!mask) continue;
      int pc = std::popcount(mask);
      if (pc > s.min_zero) {
        for (uint32_t bits = mask; bits; bits &= bits - 1) {
          uint64_t key = pattern_key(p) - (static_cast<uint64_t>(bits & -bits) << (s.rows * k));
          auto it = index.find(key);
          if (it != index.end()) poset.hasse_edges.push_back({it->second, static_cast<int>(i)});
        }
      } else if (nonempty >= 2) {
        uint64_t key = pattern_key(p) - (static_cast<uint64_t>(mask) << (s.rows * k));
        auto it = index.find(key);
        if (it != index.end()) poset.hasse_edges.push_back({it->second, static_cast<int>(i)});
      }
    }
  }
  return poset;
}

PhiImage phi_image(const IntersectionPoset& poset) {
  PhiImage phi;
  std::vector<char> seen(1u << poset.n, 0);
  for (const auto& p : poset.elements) seen[p.support()] = 1;
  for (uint32_t s = 1; s < (1u << poset.n); ++s)
    if (seen[s]) phi.supports.push_back(s);
  const uint32_t full = (1u << poset.n) - 1;
  phi.has_top = std::find(phi.supports.begin(), phi.supports.end(), full) != phi.supports.end();
  phi.has_top_formula = (poset.variant == ArrangementVariant::one_measure)
                            ? (static_cast<long>(poset.n) * (poset.c - 2) + 1 >= poset.m)
                            : (static_cast<long>(poset.n) * (poset.c - 1) >= poset.m);
  // Longest chain among realized supports under inclusion.
  std::vector<int> depth(1u << poset.n, -1);
  int best = -1;
  std::vector<uint32_t> order = phi.supports;
  std::sort(order.begin(), order.end(), [](uint32_t a, uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  for (uint32_t sup : order) {
    int d = 0;
    for (uint32_t sub = (sup - 1) & sup;; sub = (sub - 1) & sup) {
      if (seen[sub] && depth[sub] >= 0) d = std::max(d, depth[sub] + 1);
      if (sub == 0) break;
    }
    depth[sup] = d;
    best = std::max(best, d);
  }
  phi.q_prime_dim = best;
  return phi;
}

namespace {

int longest_path(const IntersectionPoset& poset, bool fiber_only) {
  const uint32_t full = (1u << poset.n) - 1;
  std::map<uint64_t, int> level;
  int best = -1;
  // Elements are sorted by zero count, so predecessors are already placed.
  for (const auto& p : poset.elements) {
    if (fiber_only && p.support() != full) continue;
    int min_zero = poset.m - poset.c + 1;
    int nonempty = std::popcount(p.support());
    int d = 0;
    for (int k = 0; k < poset.n; ++k) {
      uint32_t mask = p.colmask[k];
      if (!mask) continue;
      int pc = std::popcount(mask);
      if (pc > min_zero) {
        for (uint32_t bits = mask; bits; bits &= bits - 1) {
          auto it = level.find(pattern_key(p) -
                               (static_cast<uint64_t>(bits & -bits) << (poset.rows * k)));
          if (it != level.end()) d = std::max(d, it->second + 1);
        }
      } else if (!fiber_only && nonempty >= 2) {
        auto it = level.find(pattern_key(p) - (static_cast<uint64_t>(mask) << (poset.rows * k)));
        if (it != level.end()) d = std::max(d, it->second + 1);
      }
    }
    level[pattern_key(p)] = d;
    best = std::max(best, d);
  }
  return best;
}

}  // namespace

int order_complex_dim(const IntersectionPoset& poset) { return longest_path(poset, false); }

int order_complex_dim_fiber(const IntersectionPoset& poset) { return longest_path(poset, true); }

ArrangementStats arrangement_stats(int m, int n, int c, ArrangementVariant variant) {
  Shape s = make_shape(m, n, c, variant);
  ArrangementStats out;
  out.has_top_formula = (variant == ArrangementVariant::one_measure)
                            ? (static_cast<long>(n) * (c - 2) + 1 >= m)
                            : (static_cast<long>(n) * (c - 1) >= m);
  const int bits = s.rows * n;
  const auto choices = column_choices(s);

  if (bits <= 26) {
    std::vector<int8_t> lp(size_t{1} << bits, -1);
    std::vector<int8_t> lf(size_t{1} << bits, -1);
    std::vector<char> support_seen(1u << n, 0);
    const uint32_t all_rows = (1u << s.rows) - 1;
    std::vector<uint32_t> cur(n, 0);
    int best_p = -1, best_f = -1;

    auto walk = [&](auto&& self, int col, uint64_t idx, uint32_t and_mask, int nonempty) -> void {
      if (col == n) {
        if (nonempty == 0 || and_mask != 0) return;
        ++out.element_count;
        uint32_t sup = 0;
        for (int k = 0; k < n; ++k)
          if (cur[k]) sup |= 1u << k;
        support_seen[sup] = 1;
        int dp = 0, df = 0;
        bool in_fiber = (nonempty == n);
        for (int k = 0; k < n; ++k) {
          uint32_t mask = cur[k];
          if (!mask) continue;
          int pc = std::popcount(mask);
          if (pc > s.min_zero) {
            for (uint32_t bitset = mask; bitset; bitset &= bitset - 1) {
              uint64_t pidx = idx - (static_cast<uint64_t>(bitset & -bitset) << (s.rows * k));
              if (lp[pidx] >= 0) dp = std::max(dp, lp[pidx] + 1);
              if (in_fiber && lf[pidx] >= 0) df = std::max(df, lf[pidx] + 1);
            }
          } else if (nonempty >= 2) {
            uint64_t pidx = idx - (static_cast<uint64_t>(mask) << (s.rows * k));
            if (lp[pidx] >= 0) dp = std::max(dp, lp[pidx] + 1);
          }
        }
        lp[idx] = static_cast<int8_t>(dp);
        best_p = std::max(best_p, dp);
        if (in_fiber) {
          ++out.fiber_count;
          lf[idx] = static_cast<int8_t>(df);
          best_f = std::max(best_f, df);
        }
        return;
      }
      for (uint32_t mask : choices) {
        cur[col] = mask;
        self(self, col + 1, idx | (static_cast<uint64_t>(mask) << (s.rows * col)),
             and_mask & mask, nonempty + (mask != 0 ? 1 : 0));
      }
    };
    walk(walk, 0, 0, all_rows, 0);

    out.poset_dim = best_p;
    out.fiber_dim = best_f;
    out.fiber_nonempty = out.fiber_count > 0;
    const uint32_t fullsup = (1u << n) - 1;
    out.has_top = support_seen[fullsup] != 0;
    // Longest support chain under inclusion.
    std::vector<int> depth(1u << n, -1);
    int best_q = -1;
    for (int pc = 1; pc <= n; ++pc)
      for (uint32_t sup = 1; sup < (1u << n); ++sup) {
        if (std::popcount(sup) != pc || !support_seen[sup]) continue;
        int d = 0;
        for (uint32_t sub = (sup - 1) & sup;; sub = (sub - 1) & sup) {
          if (sub && support_seen[sub] && depth[sub] >= 0) d = std::max(d, depth[sub] + 1);
          if (sub == 0) break;
        }
        depth[sup] = d;
        best_q = std::max(best_q, d);
      }
    out.q_prime_dim = best_q;
    return out;
  }

  // Wide cells: fiber-only scan. Within the fiber every saturated chain step
  // removes exactly one zero, so depth = zeros - n*(m-c+1).
  out.fiber_scan_only = true;
  out.element_count = -1;
  std::vector<uint32_t> fiber_choices;
  for (uint32_t mask : choices)
    if (mask) fiber_choices.push_back(mask);
  int max_zeros = -1;
  const uint32_t all_rows = (1u << s.rows) - 1;
  auto walk = [&](auto&& self, int col, uint32_t and_mask, int zeros) -> void {
    if (col == n) {
      if (and_mask != 0) return;
      ++out.fiber_count;
      max_zeros = std::max(max_zeros, zeros);
      return;
    }
    for (uint32_t mask : fiber_choices) self(self, col + 1, and_mask & mask, zeros + std::popcount(mask));
  };
  walk(walk, 0, all_rows, 0);
  out.fiber_nonempty = out.fiber_count > 0;
  out.fiber_dim = out.fiber_nonempty ? max_zeros - n * s.min_zero : -1;
  return out;
}

std::string poset_to_dot(const IntersectionPoset& poset) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n  node [shape=box fontname=monospace];\n";
  for (size_t i = 0; i < poset.elements.size(); ++i) {
    const auto& p = poset.elements[i];
    os << "  e" << i << " [label=\"";
    for (int r = 0; r < p.rows; ++r) {
      for (int k = 0; k < p.cols; ++k) os << ((p.colmask[k] >> r) & 1 ? '0' : '*');
      if (r + 1 < p.rows) os << "\\n";
    }
    os << "\"];\n";
  }
  for (const auto& [lo, hi] : poset.hasse_edges) os << "  e" << lo << " -> e" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace fairfan
