#include <doctest.h>

#include <algorithm>

#include "fairfan/arrangement.hpp"
#include "fairfan/instances.hpp"

using namespace fairfan;

namespace {

bool contains_edge(const IntersectionPoset& p, int lo, int hi) {
  return std::find(p.hasse_edges.begin(), p.hasse_edges.end(), std::make_pair(lo, hi)) !=
         p.hasse_edges.end();
}

}  // namespace

TEST_CASE("tiny posets by hand: m=3, n=2, c=2") {
  // Column zero-sets need >= 2 of the 2 rows, i.e. full columns; both full
  // kills both rows, so exactly two incomparable elements survive.
  auto p = build_poset(3, 2, 2, ArrangementVariant::one_measure);
  CHECK(p.elements.size() == 2);
  CHECK(p.hasse_edges.empty());
  CHECK(order_complex_dim(p) == 0);
  auto phi = phi_image(p);
  CHECK_FALSE(phi.has_top);
  CHECK(phi.q_prime_dim == 0);
}

TEST_CASE("generator cardinality m-c+1 = 1: m=3, n=2, c=3") {
  auto p = build_poset(3, 2, 3, ArrangementVariant::one_measure);
  // Six single-column patterns plus the two patterns with zeros in both
  // columns; anything else kills a row.
  CHECK(p.elements.size() == 8);
  auto phi = phi_image(p);
  CHECK(phi.has_top);
  CHECK(phi.has_top_formula);  // n(c-2)+1 = 3 >= 3
  CHECK(order_complex_dim_fiber(p) == 2 * 3 - 3 - 2 * 2 + 1);  // nc-m-2n+1 = 0
  CHECK(order_complex_dim(p) == 2 * 3 - 2 - 3);                // nc-n-c = 1
  // Elements sort by (zeros, masks): one-zero columns first, then their
  // two-zero covers; growing a single column is a Hasse edge.
  CHECK(contains_edge(p, 2, 7));
  CHECK_FALSE(contains_edge(p, 0, 7));

  // Moving down from any element stays inside the poset: Hasse edges close
  // transitively to the containment order.
  for (size_t i = 0; i < p.elements.size(); ++i)
    for (size_t j = 0; j < p.elements.size(); ++j) {
      if (i == j) continue;
      bool leq = p.elements[i].leq(p.elements[j]);
      // Reachability over Hasse edges.
      std::vector<char> seen(p.elements.size(), 0);
      std::vector<int> stack{static_cast<int>(i)};
      seen[i] = 1;
      while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (const auto& [lo, hi] : p.hasse_edges)
          if (lo == cur && !seen[hi]) {
            seen[hi] = 1;
            stack.push_back(hi);
          }
      }
      CHECK(seen[j] == (leq ? 1 : 0));
    }
}

TEST_CASE("the m=4, n=2, c=3 full-support fiber is empty") {
  auto p = build_poset(4, 2, 3, ArrangementVariant::one_measure);
  auto phi = phi_image(p);
  CHECK_FALSE(phi.has_top);            // n(c-2)+1 = 3 < 4
  CHECK_FALSE(phi.has_top_formula);
  CHECK(order_complex_dim_fiber(p) == -1);
  CHECK(phi.q_prime_dim <= 2 - 2);     // Q' chains stay below the full face

  auto stats = arrangement_stats(4, 2, 3, ArrangementVariant::one_measure);
  CHECK(stats.element_count == static_cast<long long>(p.elements.size()));
  CHECK_FALSE(stats.fiber_nonempty);
  CHECK(stats.fiber_dim == -1);
  CHECK(stats.poset_dim == order_complex_dim(p));
}

TEST_CASE("column permutations act on elements and commute with supports") {
  auto p = build_poset(4, 3, 3, ArrangementVariant::one_measure);
  auto find_pattern = [&](const ZeroPattern& z) {
    return std::find_if(p.elements.begin(), p.elements.end(),
                        [&](const ZeroPattern& e) { return e.colmask == z.colmask; }) !=
           p.elements.end();
  };
  for (const auto& e : p.elements) {
    ZeroPattern rotated = e;
    std::rotate(rotated.colmask.begin(), rotated.colmask.begin() + 1, rotated.colmask.end());
    CHECK(find_pattern(rotated));
  }
}

TEST_CASE("realized supports are downward closed") {
  for (auto variant : {ArrangementVariant::one_measure, ArrangementVariant::sum_of_measures}) {
    auto p = build_poset(5, 3, 4, variant);
    auto phi = phi_image(p);
    std::vector<char> seen(1u << p.n, 0);
    for (uint32_t s : phi.supports) seen[s] = 1;
    for (uint32_t s : phi.supports)
      for (uint32_t sub = (s - 1) & s; sub; sub = (sub - 1) & s) CHECK(seen[sub] == 1);
  }
}

TEST_CASE("streaming stats match materialized DPs across a small grid") {
  for (auto variant : {ArrangementVariant::one_measure, ArrangementVariant::sum_of_measures})
    for (int m = 2; m <= 5; ++m)
      for (int n = 1; n <= 3; ++n)
        for (int c = 2; c <= m; ++c) {
          auto p = build_poset(m, n, c, variant);
          auto stats = arrangement_stats(m, n, c, variant);
          CAPTURE(m);
          CAPTURE(n);
          CAPTURE(c);
          CHECK(stats.element_count == static_cast<long long>(p.elements.size()));
          CHECK(stats.poset_dim == order_complex_dim(p));
          CHECK(stats.fiber_dim == order_complex_dim_fiber(p));
          auto phi = phi_image(p);
          CHECK(stats.has_top == phi.has_top);
          CHECK(stats.q_prime_dim == phi.q_prime_dim);
          // Fiber chains are graded by the zero count.
          if (stats.fiber_nonempty) {
            int max_zeros = -1;
            const uint32_t full = (1u << n) - 1;
            for (const auto& e : p.elements)
              if (e.support() == full) max_zeros = std::max(max_zeros, e.zeros());
            CHECK(stats.fiber_dim == max_zeros - n * (m - c + 1));
          }
        }
}

TEST_CASE("tilde-variant extremes carry the expected zero counts") {
  for (int m = 3; m <= 5; ++m)
    for (int n = 2; n <= 3; ++n)
      for (int c = 2; c <= m; ++c) {
        auto p = build_poset(m, n, c, ArrangementVariant::sum_of_measures);
        const uint32_t full = (1u << n) - 1;
        int max_zeros = -1, min_zeros = 1 << 20;
        for (const auto& e : p.elements)
          if (e.support() == full) {
            max_zeros = std::max(max_zeros, e.zeros());
            min_zeros = std::min(min_zeros, e.zeros());
          }
        if (max_zeros < 0) continue;  // empty fiber
        CHECK(max_zeros == m * n - std::max(m, n));
        CHECK(min_zeros == n * (m - c + 1));
      }
}

TEST_CASE("size cap raises a scope error") {
  setenv("FAIRFAN_MAX_POSET", "5", 1);
  CHECK_THROWS_AS(build_poset(5, 3, 5, ArrangementVariant::one_measure), ScopeLimitError);
  unsetenv("FAIRFAN_MAX_POSET");
}

TEST_CASE("dot export names every element") {
  auto p = build_poset(3, 2, 3, ArrangementVariant::one_measure);
  std::string dot = poset_to_dot(p);
  CHECK(dot.find("digraph poset") != std::string::npos);
  CHECK(dot.find("e7") != std::string::npos);
}
