#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fairfan/rational.hpp"

namespace fairfan {

// one_measure: (m-1) x n patterns, row sums fixed (no all-zero row).
// sum_of_measures: m x n patterns, row and column sums fixed (additionally
// no all-zero column).
enum class ArrangementVariant { one_measure, sum_of_measures };

// Column zero-sets of an intersection subspace: every nonempty column has at
// least m-c+1 forced zeros.
struct ZeroPattern {
  int rows = 0, cols = 0;
  std::vector<uint32_t> colmask;

  int zeros() const;
  uint32_t support() const;  // bitmask of nonempty columns
  bool leq(const ZeroPattern& other) const;  // zero-set containment
  bool operator==(const ZeroPattern&) const = default;
};

struct IntersectionPoset {
  ArrangementVariant variant = ArrangementVariant::one_measure;
  int m = 0, n = 0, c = 0, rows = 0;
  std::vector<ZeroPattern> elements;               // sorted by (zeros, masks)
  std::vector<std::pair<int, int>> hasse_edges;    // (smaller, larger) indices
};

// Enumerates all admissible patterns; throws ScopeLimitError past the element
// cap (FAIRFAN_MAX_POSET, default 2000000).
IntersectionPoset build_poset(int m, int n, int c, ArrangementVariant variant);

struct PhiImage {
  std::vector<uint32_t> supports;  // realized column-support sets, sorted
  bool has_top = false;
  bool has_top_formula = false;  // n(c-2)+1 >= m, resp. n(c-1) >= m
  int q_prime_dim = -1;          // longest chain among supports (edges)
};

PhiImage phi_image(const IntersectionPoset& poset);

// Longest chain (in edges) of the whole poset / of the induced subposet of
// full-support elements, via DAG longest path. Empty = -1.
int order_complex_dim(const IntersectionPoset& poset);
int order_complex_dim_fiber(const IntersectionPoset& poset);

constexpr int kDimUnknown = -1000;

struct ArrangementStats {
  long long element_count = 0;
  long long fiber_count = 0;
  int poset_dim = kDimUnknown;  // -1 when the poset is empty
  int fiber_dim = -1;
  bool fiber_nonempty = false;
  bool has_top = false;
  bool has_top_formula = false;
  int q_prime_dim = -1;
  bool fiber_scan_only = false;  // large cells: only the fiber was enumerated
};

// Streaming enumeration without materializing elements. Cells with
// rows*n <= 26 get the full longest-path DP; wider cells fall back to a
// fiber-only scan where chain length is graded by the zero count (every
// saturated fiber chain removes one zero at a time).
ArrangementStats arrangement_stats(int m, int n, int c, ArrangementVariant variant);

std::string poset_to_dot(const IntersectionPoset& poset);

}  // namespace fairfan
