#include <algorithm>
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "satlab/formulas.hpp"
#include "satlab/rational.hpp"

using namespace satlab;

namespace {

// Direct subset-sum evaluation of f: T runs over subsets J of positions,
// multiplying s_j outside J and (s-2-s_j-#{i in J : i < j}) inside J.
Rational brute_f(int s, const std::vector<int>& sj) {
  int k = int(sj.size());
  long long twice_t = 0;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    long long term = 1;
    int inside_before = 0;
    for (int j = 0; j < k; ++j) {
      if (mask >> j & 1) {
        term *= s - 2 - sj[j] - inside_before;
        ++inside_before;
      } else {
        term *= sj[j];
      }
    }
    twice_t += 2 * term;
  }
  long long prod = 1;
  for (int x : sj) prod *= x;
  return Rational(twice_t - prod, 2);
}

Rational eval_f(int s, std::vector<int> entries) {
  FVector fv;
  fv.s = s;
  fv.entries = std::move(entries);
  return essential_count_f(fv);
}

}  // namespace

TEST_CASE("falling factorial") {
  REQUIRE(falling_factorial(4, 4) == 24);
  REQUIRE(falling_factorial(3, 5) == 0);
  REQUIRE(falling_factorial(7, 0) == 1);
  REQUIRE(falling_factorial(10, 3) == 720);
  REQUIRE(falling_factorial(0, 0) == 1);
  REQUIRE_THROWS_AS(falling_factorial(4, -1), std::invalid_argument);
  REQUIRE_THROWS_AS(falling_factorial(30, 25), std::overflow_error);
}

TEST_CASE("binomial") {
  REQUIRE(binomial(0, 0) == 1);
  REQUIRE(binomial(5, 2) == 10);
  REQUIRE(binomial(5, 7) == 0);
  REQUIRE(binomial(5, -1) == 0);
  REQUIRE(binomial(64, 32) == 1832624140942590534LL);
  REQUIRE_THROWS_AS(binomial(70, 35), std::overflow_error);
}

TEST_CASE("minimum saturated edge counts") {
  REQUIRE(ehm_sat(4, 3) == 3);
  REQUIRE(ehm_sat(7, 4) == 11);
  REQUIRE(ehm_sat(8, 5) == 18);
  REQUIRE(ehm_sat(5, 2) == 0);
  for (int s = 2; s <= 8; ++s)
    for (long long n = s; n <= 30; ++n)
      REQUIRE(ehm_sat(n, s) ==
              (s - 2) * (n - s + 2) + binomial(s - 2, 2));
  REQUIRE_THROWS_AS(ehm_sat(3, 4), std::invalid_argument);
  REQUIRE_THROWS_AS(ehm_sat(5, 1), std::invalid_argument);
}

TEST_CASE("clique counts of the extremal host") {
  REQUIRE(sat_cliques(10, 3, 5) == 22);
  REQUIRE(sat_cliques(12, 3, 4) == 10);
  REQUIRE(sat_cliques(10, 2, 5) == ehm_sat(10, 5));
  for (int s = 3; s <= 8; ++s)
    for (int r = 2; r < s; ++r)
      for (long long n = s; n <= 20; ++n)
        REQUIRE(sat_cliques(n, r, s) ==
                (n - s + 2) * binomial(s - 2, r - 1) + binomial(s - 2, r));
  REQUIRE_THROWS_AS(sat_cliques(10, 1, 5), std::invalid_argument);
  REQUIRE_THROWS_AS(sat_cliques(10, 5, 5), std::invalid_argument);
  REQUIRE_THROWS_AS(sat_cliques(4, 3, 5), std::invalid_argument);
}

TEST_CASE("triangle count of the near-extremal host") {
  REQUIRE(near_extremal_cliques(10, 3, 5) == 32);
  REQUIRE(near_extremal_cliques(8, 3, 4) == 10);
  REQUIRE_THROWS_AS(near_extremal_cliques(10, 4, 4), std::invalid_argument);
}

TEST_CASE("clique count bracket") {
  BoundsPair b = kmtt_clique_bounds(12, 3, 4);
  REQUIRE(b.lower.has_value());
  REQUIRE(*b.lower == Rational(8));
  REQUIRE(*b.upper == Rational(10));

  BoundsPair c = kmtt_clique_bounds(10, 3, 5);
  REQUIRE(*c.lower == Rational(50, 3));
  REQUIRE(*c.upper == Rational(22));

  // Lower slope stays under the upper slope, so past the small-n crossover
  // the bracket is ordered.  (At n = s the linear lower bound can exceed
  // the exact count; 2s clears every crossover for s <= 8.)
  for (int s = 4; s <= 8; ++s)
    for (int r = 3; r < s; ++r)
      for (long long n = 2 * s; n <= 40; ++n) {
        BoundsPair x = kmtt_clique_bounds(n, r, s);
        REQUIRE(*x.lower <= *x.upper);
      }
  REQUIRE_THROWS_AS(kmtt_clique_bounds(10, 2, 5), std::invalid_argument);
}

TEST_CASE("leading cycle count in the extremal host") {
  REQUIRE(join_cycle_leading(6, 4, 4) == Rational(6));
  REQUIRE(join_cycle_leading(7, 4, 5) == Rational(18));
  REQUIRE(join_cycle_leading(7, 5, 5) == Rational(36));
  REQUIRE(join_cycle_leading(12, 4, 4) ==
          Rational(binomial(10, 2) * 2, 2));
  REQUIRE_THROWS_AS(join_cycle_leading(10, 3, 5), std::invalid_argument);
  REQUIRE_THROWS_AS(join_cycle_leading(10, 4, 3), std::invalid_argument);
}

TEST_CASE("cycle count bracket") {
  BoundsPair even = kmtt_cycle_bounds(10, 4, 5);
  REQUIRE(*even.lower == Rational(75));
  REQUIRE(*even.upper == Rational(150));

  BoundsPair odd = kmtt_cycle_bounds(10, 5, 5);
  REQUIRE(*odd.lower == Rational(3, 4));
  REQUIRE(*odd.upper == Rational(300));

  for (int s = 5; s <= 8; ++s)
    for (int r = 4; r <= 2 * s - 4; ++r)
      for (long long n = s; n <= 30; ++n) {
        BoundsPair x = kmtt_cycle_bounds(n, r, s);
        REQUIRE(*x.lower <= *x.upper);
      }
  REQUIRE_THROWS_AS(kmtt_cycle_bounds(10, 4, 4), std::invalid_argument);
  REQUIRE_THROWS_AS(kmtt_cycle_bounds(10, 9, 5), std::invalid_argument);
}

TEST_CASE("leading four-cycle coefficient") {
  REQUIRE(c4_leading(10, 5) == Rational(135));
  REQUIRE(c4_leading(7, 4) == Rational(21));
  REQUIRE_THROWS_AS(c4_leading(10, 3), std::invalid_argument);
}

TEST_CASE("essential pair count f at pinned points") {
  REQUIRE(eval_f(6, {0, 0, 0, 0}) == Rational(24));
  REQUIRE(eval_f(6, {4, 4, 4, 4}) == Rational(128));
  REQUIRE(eval_f(5, {0, 0}) == Rational(6));
  FVector bad;
  bad.s = 6;
  bad.entries = {0, 5};
  REQUIRE_THROWS_AS(essential_count_f(bad), std::invalid_argument);
  FVector none;
  none.s = 6;
  REQUIRE_THROWS_AS(essential_count_f(none), std::invalid_argument);
}

TEST_CASE("essential pair count f matches subset-sum evaluation") {
  std::mt19937_64 rng(41001);
  for (int iter = 0; iter < 400; ++iter) {
    int s = 4 + int(rng() % 7);
    int k = 1 + int(rng() % std::min(6, s - 2));
    std::vector<int> sj(k);
    for (int& x : sj) x = int(rng() % (s - 1));
    REQUIRE(eval_f(s, sj) == brute_f(s, sj));
  }
}

TEST_CASE("grid minimization finds the flat ray") {
  GridMinimum g64 = minimize_f_grid(6, 4);
  REQUIRE(g64.minimum == Rational(24));
  REQUIRE(g64.gap == Rational(12));
  REQUIRE(g64.minimizers.size() == 5);
  std::vector<std::vector<int>> got;
  for (const FVector& fv : g64.minimizers) got.push_back(fv.entries);
  std::sort(got.begin(), got.end());
  std::vector<std::vector<int>> want;
  for (int t = 0; t <= 4; ++t) want.push_back({0, 0, 0, t});
  REQUIRE(got == want);

  GridMinimum g75 = minimize_f_grid(7, 5);
  REQUIRE(g75.minimum == Rational(120));
  REQUIRE(g75.gap == Rational(60));
  REQUIRE(g75.minimizers.size() == 6);
  for (const FVector& fv : g75.minimizers)
    REQUIRE(essential_count_f(fv) == Rational(120));

  REQUIRE_THROWS_AS(minimize_f_grid(3, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(minimize_f_grid(6, 5), std::invalid_argument);
  REQUIRE_THROWS_AS(minimize_f_grid(6, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(minimize_f_grid(12, 9), std::invalid_argument);
}

TEST_CASE("half power dominates falling factorial on the scan range") {
  // (s-2)^k / 2 > (s-2)_k for every (s, k) pair the grid scan targets;
  // the separation argument leans on this comparison.
  const int pairs[][2] = {{6, 4}, {7, 5}, {8, 5}, {8, 6}, {9, 6},
                          {9, 7}, {10, 6}, {10, 7}, {10, 8}};
  for (auto [s, k] : pairs) {
    long long pw = 1, ff = 1;
    for (int i = 0; i < k; ++i) {
      pw *= s - 2;
      ff *= s - 2 - i;
    }
    REQUIRE(Rational(pw, 2) > Rational(ff));
  }
}

TEST_CASE("edge bounds for disjoint clique families") {
  BoundsPair div = family_edge_bounds(8, 4);
  REQUIRE_FALSE(div.lower.has_value());
  REQUIRE(*div.upper == Rational(12));

  BoundsPair nondiv = family_edge_bounds(9, 4);
  REQUIRE(*nondiv.lower == Rational(35, 4));
  REQUIRE_FALSE(nondiv.upper.has_value());

  REQUIRE_THROWS_AS(family_edge_bounds(3, 4), std::invalid_argument);
  REQUIRE_THROWS_AS(family_edge_bounds(10, 3), std::invalid_argument);
}

TEST_CASE("clique coefficient pair for overlap families") {
  auto [lo, hi] = family_clique_bound_coeffs(12, 2);
  REQUIRE(lo == Rational(66, 12));
  REQUIRE(hi == Rational(67, 12));
  REQUIRE(lo < hi);
  for (int m = 12; m <= 24; ++m) {
    auto [a, b] = family_clique_bound_coeffs(m, 2);
    REQUIRE(a < b);
  }
  REQUIRE_THROWS_AS(family_clique_bound_coeffs(11, 2), std::invalid_argument);
  auto [pl, ph] = family_clique_bound_coeffs(5, 3, true);
  REQUIRE(pl == Rational(2));
  REQUIRE(ph == Rational(11, 5));
  REQUIRE_THROWS_AS(family_clique_bound_coeffs(23, 3), std::invalid_argument);
  REQUIRE(family_clique_bound_coeffs(24, 3).first == Rational(2024, 24));
}

TEST_CASE("binomial inequality holds from the threshold onward") {
  for (int r = 2; r <= 6; ++r) {
    long long start = 2LL * r * r + 2 * r;
    for (long long m = start; m <= start + 40; ++m)
      REQUIRE(binomial_inequality_check(m, r));
  }
  REQUIRE_FALSE(binomial_inequality_check(6, 2));
  REQUIRE_THROWS_AS(binomial_inequality_check(10, 1), std::invalid_argument);
}

TEST_CASE("independent set bound under both density conventions") {
  IndepSetBound pc = indep_set_lower_bound(5, 5, 2, TauConvention::PairCount);
  REQUIRE_FALSE(pc.tau_undefined);
  REQUIRE(pc.bound == Rational(25, 4));

  IndepSetBound hs = indep_set_lower_bound(5, 5, 2, TauConvention::HalfSquare);
  REQUIRE_FALSE(hs.tau_undefined);
  REQUIRE(hs.bound == Rational(5));

  IndepSetBound empty =
      indep_set_lower_bound(6, 0, 3, TauConvention::PairCount);
  REQUIRE(empty.tau_undefined);

  IndepSetBound complete =
      indep_set_lower_bound(5, 10, 2, TauConvention::PairCount);
  REQUIRE(complete.bound == Rational(0));

  REQUIRE_THROWS_AS(indep_set_lower_bound(5, 5, 0, TauConvention::PairCount),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(indep_set_lower_bound(0, 0, 2, TauConvention::PairCount),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(indep_set_lower_bound(5, -1, 2, TauConvention::PairCount),
                    std::invalid_argument);
}
