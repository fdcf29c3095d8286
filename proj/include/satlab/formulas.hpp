#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "satlab/rational.hpp"

namespace satlab {

namespace detail {

// Integer binomial over 128 bits; 0 whenever b < 0 or a < b.
inline int128 binom(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  if (b > a - b) b = a - b;
  int128 num = 1;
  for (long long i = 1; i <= b; ++i) {
    num = checked_mul(num, int128(a - b + i));
    num /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return num;
}

inline int128 ipow(long long base, int exp) {
  int128 r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, int128(base));
  return r;
}

}  // namespace detail

// (m)_k = m(m-1)...(m-k+1); empty product for k = 0, zero past a zero factor.
inline long long falling_factorial(long long m, int k) {
  if (k < 0) throw std::invalid_argument("falling_factorial: k < 0");
  detail::int128 r = 1;
  for (int i = 0; i < k; ++i) r = detail::checked_mul(r, detail::int128(m - i));
  if (r > detail::int128(__INT64_C(0x7fffffffffffffff)) ||
      r < -detail::int128(__INT64_C(0x7fffffffffffffff)))
    throw std::overflow_error("falling_factorial: exceeds 64 bits");
  return static_cast<long long>(r);
}

inline long long binomial(long long a, long long b) {
  detail::int128 r = detail::binom(a, b);
  if (r > detail::int128(__INT64_C(0x7fffffffffffffff)))
    throw std::overflow_error("binomial: exceeds 64 bits");
  return static_cast<long long>(r);
}

// Minimum edges over graphs on n vertices with no K_s whose every non-edge
// completes one: (s-2)(n-s+2) + C(s-2,2).
inline long long ehm_sat(long long n, int s) {
  if (s < 2) throw std::invalid_argument("ehm_sat: s < 2");
  if (n < s) throw std::invalid_argument("ehm_sat: n < s");
  return (s - 2) * (n - s + 2) + binomial(s - 2, 2);
}

// Minimum K_r count in the same setting: (n-s+2)C(s-2,r-1) + C(s-2,r).
// Exact as the K_r count of ehm_extremal for every n >= s.
inline long long sat_cliques(long long n, int r, int s) {
  if (r < 2) throw std::invalid_argument("sat_cliques: r < 2");
  if (s <= r) throw std::invalid_argument("sat_cliques: r >= s");
  if (n < s) throw std::invalid_argument("sat_cliques: n < s");
  return (n - s + 2) * binomial(s - 2, r - 1) + binomial(s - 2, r);
}

// Closed form for the K_r count of remark_near_extremal(n, s).
inline long long near_extremal_cliques(long long n, int r, int s) {
  if (r < 2) throw std::invalid_argument("near_extremal_cliques: r < 2");
  if (s <= r) throw std::invalid_argument("near_extremal_cliques: r >= s");
  if (n < s) throw std::invalid_argument("near_extremal_cliques: n < s");
  return (2 * binomial(s - 3, r - 2) + binomial(s - 3, r - 1)) * (n - s + 1) +
         2 * binomial(s - 3, r - 1) + binomial(s - 3, r);
}

struct BoundsPair {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  std::optional<long long> exact_value;
};

// Prior-work bracket on the minimum K_r count over strongly-saturated
// hosts: lower = max of two linear-in-n expressions, upper = sat_cliques.
inline BoundsPair kmtt_clique_bounds(long long n, int r, int s) {
  if (r < 3) throw std::invalid_argument("kmtt_clique_bounds: r < 3");
  if (s <= r) throw std::invalid_argument("kmtt_clique_bounds: r >= s");
  if (n < s) throw std::invalid_argument("kmtt_clique_bounds: n < s");
  long long c1 = binomial(s - 2, r - 1);
  long long c2 = binomial(s - 3, r - 2);
  Rational a = Rational(c1, r - 1) * Rational(n) - Rational(2 * c1);
  Rational b = Rational(c1 + c2, r) * Rational(n);
  BoundsPair out;
  out.lower = (a < b) ? b : a;
  out.upper = Rational(sat_cliques(n, r, s));
  return out;
}

// Cycle count of the join construction restricted to cycles using exactly
// floor(r/2) independent-part vertices; the dominant term, exact for odd r
// at k+1 = s-2 and for (r,s) = (4,4).
inline Rational join_cycle_leading(long long n, int r, int s) {
  if (s < 4) throw std::invalid_argument("join_cycle_leading: s < 4");
  if (r < 4) throw std::invalid_argument("join_cycle_leading: r < 4");
  if (n < s) throw std::invalid_argument("join_cycle_leading: n < s");
  int k = r / 2;
  detail::int128 sets = detail::binom(n - s + 2, k);
  detail::int128 per;
  if (r % 2 == 0)
    per = detail::checked_mul(detail::int128(falling_factorial(s - 2, k)),
                              detail::int128(falling_factorial(k - 1, k - 1)));
  else
    per = detail::checked_mul(detail::int128(falling_factorial(s - 2, k + 1)),
                              detail::int128(falling_factorial(k, k)));
  return Rational(detail::checked_mul(sets, per), 2);
}

// The four asymptotic kernels bracketing the minimum C_r count, with the
// 1 +- o(1) factors dropped.
inline BoundsPair kmtt_cycle_bounds(long long n, int r, int s) {
  if (s < 5) throw std::invalid_argument("kmtt_cycle_bounds: s < 5");
  if (r < 4) throw std::invalid_argument("kmtt_cycle_bounds: r < 4");
  if (r > 2 * s - 4) throw std::invalid_argument("kmtt_cycle_bounds: r > 2s-4");
  int k = r / 2;
  detail::int128 nk = detail::ipow(n, k);
  BoundsPair out;
  if (r % 2 == 0) {
    detail::int128 fk = falling_factorial(s - 2, k);
    out.lower = Rational(detail::checked_mul(nk, fk), 4 * k);
    out.upper = Rational(detail::checked_mul(nk, fk), 2 * k);
  } else {
    detail::int128 fk1 = falling_factorial(s - 2, k + 1);
    detail::int128 num = detail::checked_mul(
        detail::checked_mul(nk, fk1),
        detail::int128(falling_factorial(k - 2, k - 2)));
    detail::int128 den = detail::checked_mul(
        detail::checked_mul(detail::int128(r * (r - 3)),
                            detail::int128(falling_factorial(r, k))),
        detail::int128(s - 1));
    out.lower = Rational(num, den);
    out.upper = Rational(detail::checked_mul(nk, fk1), 2);
  }
  return out;
}

// Leading term of the minimum C4 count: C(s-2,2) C(n,2).
inline Rational c4_leading(long long n, int s) {
  if (s < 4) throw std::invalid_argument("c4_leading: s < 4");
  return Rational(detail::checked_mul(detail::binom(s - 2, 2),
                                      detail::binom(n, 2)));
}

// Point in the essential-cycle-count domain: k coordinates in {0..s-2}.
struct FVector {
  int s = 4;
  std::vector<int> entries;

  void validate() const {
    if (s < 4) throw std::invalid_argument("FVector: s < 4");
    if (entries.empty()) throw std::invalid_argument("FVector: k < 1");
    for (int e : entries)
      if (e < 0 || e > s - 2)
        throw std::invalid_argument("FVector: entry outside {0..s-2}");
  }
};

namespace detail {

// 2T where T sums, over all subsets J of positions, the product of s_j for
// j outside J and (s-2-s_j-|{i in J : i < j}|) for j inside J.  Computed by
// a left-to-right scan whose state is |J| so far; doubling keeps it integer.
inline int128 essential_twice_total(int s, const std::vector<int>& sj) {
  std::vector<int128> dp(sj.size() + 1, 0);
  dp[0] = 1;
  for (std::size_t j = 0; j < sj.size(); ++j) {
    std::vector<int128> next(sj.size() + 1, 0);
    for (std::size_t t = 0; t <= j; ++t) {
      if (dp[t] == 0) continue;
      next[t] = checked_add(next[t], checked_mul(dp[t], int128(sj[j])));
      next[t + 1] = checked_add(
          next[t + 1], checked_mul(dp[t], int128(s - 2 - sj[j] - int(t))));
    }
    dp.swap(next);
  }
  int128 total = 0;
  for (int128 v : dp) total = checked_add(total, v);
  return checked_mul(total, int128(2));
}

inline int128 product_of(const std::vector<int>& v) {
  int128 p = 1;
  for (int x : v) p = checked_mul(p, int128(x));
  return p;
}

}  // namespace detail

// f(s_1..s_k) = half the product of the s_j plus the sum over nonempty J of
// the mixed products; equals (2T - prod)/2 with T as in the scan above.
inline Rational essential_count_f(const FVector& fv) {
  fv.validate();
  detail::int128 twice =
      detail::essential_twice_total(fv.s, fv.entries) -
      detail::product_of(fv.entries);
  return Rational(twice, 2);
}

struct GridMinimum {
  std::vector<FVector> minimizers;
  Rational minimum{0};
  Rational gap{0};  // second-best value minus minimum; 0 if grid has one value
};

// Exhaustive scan of f over the full grid {0..s-2}^k.  Tracks every argmin
// and the distance to the next distinct value.  The scan is an odometer over
// the coordinates with the DP state cached per prefix, so advancing the last
// coordinate recomputes one DP level instead of k.
inline GridMinimum minimize_f_grid(int s, int k) {
  if (s < 4) throw std::invalid_argument("minimize_f_grid: s < 4");
  if (k < 1 || k > s - 2)
    throw std::invalid_argument("minimize_f_grid: need 1 <= k <= s-2");
  double size = 1;
  for (int i = 0; i < k; ++i) size *= s - 1;
  if (size > 1e8) throw std::invalid_argument("minimize_f_grid: grid too large");

  using detail::int128;
  std::vector<std::vector<int128>> level(k + 1,
                                         std::vector<int128>(k + 1, 0));
  std::vector<int128> prefix_prod(k + 1, 1);
  level[0][0] = 1;
  std::vector<int> point(k, 0);
  auto recompute_from = [&](int p) {
    for (int j = p; j < k; ++j) {
      const std::vector<int128>& cur = level[j];
      std::vector<int128>& nxt = level[j + 1];
      std::fill(nxt.begin(), nxt.begin() + j + 2, int128(0));
      int sj = point[j];
      for (int t = 0; t <= j; ++t) {
        int128 v = cur[t];
        if (v == 0) continue;
        nxt[t] = detail::checked_add(nxt[t], detail::checked_mul(v, int128(sj)));
        nxt[t + 1] = detail::checked_add(
            nxt[t + 1], detail::checked_mul(v, int128(s - 2 - sj - t)));
      }
      prefix_prod[j + 1] = detail::checked_mul(prefix_prod[j], int128(sj));
    }
  };
  recompute_from(0);

  bool have_best = false, have_second = false;
  int128 best = 0, second = 0;
  std::vector<std::vector<int>> argmins;
  for (;;) {
    int128 total = 0;
    for (int t = 0; t <= k; ++t)
      total = detail::checked_add(total, level[k][t]);
    int128 twice = detail::checked_mul(total, int128(2)) - prefix_prod[k];
    if (!have_best || twice < best) {
      if (have_best) {
        second = best;
        have_second = true;
      }
      best = twice;
      have_best = true;
      argmins.clear();
      argmins.push_back(point);
    } else if (twice == best) {
      if (argmins.size() >= 1000000)
        throw std::runtime_error("minimize_f_grid: too many minimizers");
      argmins.push_back(point);
    } else if (!have_second || twice < second) {
      second = twice;
      have_second = true;
    }
    int p = k - 1;
    while (p >= 0 && point[p] == s - 2) point[p--] = 0;
    if (p < 0) break;
    ++point[p];
    recompute_from(p);
  }
  GridMinimum out;
  for (std::vector<int>& a : argmins) {
    FVector fv;
    fv.s = s;
    fv.entries = std::move(a);
    out.minimizers.push_back(std::move(fv));
  }
  out.minimum = Rational(best, 2);
  if (have_second) out.gap = Rational(second - best, 2);
  return out;
}

// Edge bounds for the three-member family: an upper bound from the disjoint
// clique cover when m divides n, a lower bound otherwise.
inline BoundsPair family_edge_bounds(long long n, int m) {
  if (m < 4) throw std::invalid_argument("family_edge_bounds: m < 4");
  if (n < m) throw std::invalid_argument("family_edge_bounds: n < m");
  BoundsPair out;
  if (n % m == 0)
    out.upper = Rational(n / m * binomial(m, 2));
  else
    out.lower = Rational((n - m) * (binomial(m, 2) + 1), m);
  return out;
}

// Leading per-n coefficients of the K_r count for the overlap family:
// C(m,r)/m when m divides n, (C(m,r)+1)/m (minus o(n) slack) otherwise.
inline std::pair<Rational, Rational> family_clique_bound_coeffs(
    int m, int r, bool permissive = false) {
  if (r < 2) throw std::invalid_argument("family_clique_bound_coeffs: r < 2");
  int floor_m = permissive ? r + 2 : 2 * r * r + 2 * r;
  if (m < floor_m)
    throw std::invalid_argument("family_clique_bound_coeffs: m below range");
  detail::int128 c = detail::binom(m, r);
  return {Rational(c, m), Rational(c + 1, m)};
}

// m C(m-r-2, r-1) > C(m,r); integer comparison, no asymptotics.
inline bool binomial_inequality_check(long long m, int r) {
  if (r < 2) throw std::invalid_argument("binomial_inequality_check: r < 2");
  return detail::checked_mul(detail::int128(m), detail::binom(m - r - 2, r - 1)) >
         detail::binom(m, r);
}

enum class TauConvention {
  PairCount,   // edges = (1/tau) C(n,2)
  HalfSquare,  // edges = (1 - 1/tau) n^2 / 2, complement reading
};

struct IndepSetBound {
  Rational bound{0};
  bool tau_undefined = false;  // zero edges: no tau, bound reported as 0
};

// C(tau, l) (n/tau)^l with the generalized (rational tau) binomial, clamped
// to 0 when that binomial is nonpositive.
inline IndepSetBound indep_set_lower_bound(long long n, long long edge_count,
                                           int l, TauConvention convention) {
  if (l < 1) throw std::invalid_argument("indep_set_lower_bound: l < 1");
  if (n < 1) throw std::invalid_argument("indep_set_lower_bound: n < 1");
  if (edge_count < 0)
    throw std::invalid_argument("indep_set_lower_bound: negative edges");
  IndepSetBound out;
  if (edge_count == 0) {
    out.tau_undefined = true;
    return out;
  }
  Rational tau =
      (convention == TauConvention::PairCount)
          ? Rational(detail::binom(n, 2), detail::int128(edge_count))
          : Rational(detail::checked_mul(detail::int128(n), detail::int128(n)),
                     detail::checked_mul(detail::int128(n), detail::int128(n)) -
                         detail::checked_mul(detail::int128(2),
                                             detail::int128(edge_count)));
  // Generalized binomial: tau (tau-1) ... (tau-l+1) / l!.
  Rational gb = Rational(1);
  for (int i = 0; i < l; ++i) gb = gb * (tau - Rational(i));
  gb = gb / Rational(falling_factorial(l, l));
  if (gb <= Rational(0)) return out;
  Rational ratio = Rational(n) / tau;
  Rational power = Rational(1);
  for (int i = 0; i < l; ++i) power = power * ratio;
  out.bound = gb * power;
  return out;
}

}  // namespace satlab
