#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "satlab/canonical.hpp"
#include "satlab/graph.hpp"
#include "satlab/wide.hpp"

namespace satlab {

// Counting / containment target: a clique, a cycle, or an arbitrary graph.
class Pattern {
 public:
  enum class Kind { Clique, Cycle, General };

  static Pattern clique(int r) {
    if (r < 1) throw std::invalid_argument("Pattern: clique size < 1");
    Pattern p;
    p.kind_ = Kind::Clique;
    p.r_ = r;
    return p;
  }
  static Pattern cycle(int r) {
    if (r < 3) throw std::invalid_argument("Pattern: cycle length < 3");
    Pattern p;
    p.kind_ = Kind::Cycle;
    p.r_ = r;
    return p;
  }
  static Pattern general(Graph g) {
    if (g.order() < 1) throw std::invalid_argument("Pattern: empty graph");
    Pattern p;
    p.kind_ = Kind::General;
    p.g_ = g;
    p.r_ = g.order();
    return p;
  }

  Kind kind() const { return kind_; }
  int order() const { return r_; }
  // The pattern as a concrete graph (K_r / C_r materialized on demand).
  Graph as_graph() const {
    switch (kind_) {
      case Kind::Clique:
        return Graph::complete(r_);
      case Kind::Cycle: {
        std::vector<EdgePair> es;
        for (int i = 0; i < r_; ++i) es.push_back({i, (i + 1) % r_});
        return Graph::from_edges(r_, es);
      }
      case Kind::General:
        return g_;
    }
    throw std::logic_error("Pattern: bad kind");
  }

 private:
  Pattern() = default;
  Kind kind_ = Kind::Clique;
  int r_ = 1;
  Graph g_;
};

// Edges split by membership in some K_r (e1) versus none (e2).
struct EdgePartition {
  std::vector<EdgePair> e1;
  std::vector<EdgePair> e2;
};

namespace detail {

// Shared clique counter over explicit adjacency rows (callers pass either the
// graph's rows or their complements).  Enumerates extensions of the current
// clique through a shrinking candidate mask; if the plain walk exceeds a step
// budget it restarts with memoization on (candidate mask, size left), which
// collapses the dense cases (e.g. K64 choose 32) to polynomially many states.
class CliqueCounter {
 public:
  CliqueCounter(const std::array<std::uint64_t, kMaxOrder>& rows, int n)
      : rows_(rows), n_(n) {}

  Count count(int r) const {
    if (r > n_) return Count{0};
    if (r == 0) return Count{1};
    std::uint64_t all = below_mask(n_);
    steps_ = 0;
    try {
      return plain(all, r);
    } catch (const BudgetExceeded&) {
      memo_.assign(static_cast<std::size_t>(r) + 1, {});
      return memoized(all, r);
    }
  }

  bool exists(int r) const {
    if (r > n_) return false;
    if (r == 0) return true;
    return find(below_mask(n_), r);
  }

  // True iff some r-clique lies inside `mask`.
  bool exists_within(std::uint64_t mask, int r) const {
    if (r == 0) return true;
    return find(mask, r);
  }

 private:
  struct BudgetExceeded {};
  static constexpr std::uint64_t kStepBudget = 40'000'000;

  Count plain(std::uint64_t cand, int need) const {
    if (need == 0) return Count{1};
    Count total{0};
    while (bit_count(cand) >= need) {
      if (++steps_ > kStepBudget) throw BudgetExceeded{};
      int v = lowest_bit(cand);
      cand &= cand - 1;
      total += plain(cand & rows_[v], need - 1);
    }
    return total;
  }

  Count memoized(std::uint64_t cand, int need) const {
    if (need == 0) return Count{1};
    if (bit_count(cand) < need) return Count{0};
    auto& level = memo_[static_cast<std::size_t>(need)];
    auto it = level.find(cand);
    if (it != level.end()) return it->second;
    Count total{0};
    std::uint64_t rest = cand;
    while (bit_count(rest) >= need) {
      int v = lowest_bit(rest);
      rest &= rest - 1;
      total += memoized(rest & rows_[v], need - 1);
    }
    if (level.size() < kMemoCap) level.emplace(cand, total);
    return total;
  }

  bool find(std::uint64_t cand, int need) const {
    if (need == 0) return true;
    while (bit_count(cand) >= need) {
      int v = lowest_bit(cand);
      cand &= cand - 1;
      if (find(cand & rows_[v], need - 1)) return true;
    }
    return false;
  }

  static constexpr std::size_t kMemoCap = 1u << 22;
  const std::array<std::uint64_t, kMaxOrder>& rows_;
  int n_;
  mutable std::uint64_t steps_ = 0;
  mutable std::vector<std::unordered_map<std::uint64_t, Count>> memo_;
};

inline std::array<std::uint64_t, kMaxOrder> graph_rows(const Graph& g) {
  std::array<std::uint64_t, kMaxOrder> rows{};
  for (int v = 0; v < g.order(); ++v) rows[v] = g.row(v);
  return rows;
}

inline std::array<std::uint64_t, kMaxOrder> complement_rows(const Graph& g) {
  std::array<std::uint64_t, kMaxOrder> rows{};
  std::uint64_t all = g.vertex_mask();
  for (int v = 0; v < g.order(); ++v)
    rows[v] = ~g.row(v) & all & ~(std::uint64_t{1} << v);
  return rows;
}

}  // namespace detail

inline Count count_cliques(const Graph& g, int r) {
  if (r < 1) throw std::invalid_argument("count_cliques: r < 1");
  auto rows = detail::graph_rows(g);
  return detail::CliqueCounter(rows, g.order()).count(r);
}

inline Count count_independent_sets(const Graph& g, int l) {
  if (l < 1) throw std::invalid_argument("count_independent_sets: l < 1");
  auto rows = detail::complement_rows(g);
  return detail::CliqueCounter(rows, g.order()).count(l);
}

namespace detail {

// Each r-cycle is produced exactly once: rooted at its minimum vertex, all
// other vertices larger, and the walk direction fixed by second < last.
template <typename OnCycle>
bool for_each_cycle(const Graph& g, int r, OnCycle&& on_cycle) {
  int n = g.order();
  if (r > n) return false;
  auto rows = graph_rows(g);
  int path[kMaxOrder];
  // Returns true if the caller asked to stop early.
  auto dfs = [&](auto&& self, int root, int last, int depth,
                 std::uint64_t used) -> bool {
    if (depth == r) {
      if ((rows[last] >> root & 1) && path[1] < last)
        if (on_cycle()) return true;
      return false;
    }
    std::uint64_t cand = rows[last] & ~used & ~below_mask(root + 1);
    while (cand) {
      int v = lowest_bit(cand);
      cand &= cand - 1;
      path[depth] = v;
      if (self(self, root, v, depth + 1, used | std::uint64_t{1} << v))
        return true;
    }
    return false;
  };
  for (int root = 0; root + r <= n; ++root) {
    path[0] = root;
    if (dfs(dfs, root, root, 1, std::uint64_t{1} << root)) return true;
  }
  return false;
}

}  // namespace detail

inline Count count_cycles(const Graph& g, int r) {
  if (r < 3) throw std::invalid_argument("count_cycles: r < 3");
  Count total{0};
  detail::for_each_cycle(g, r, [&] {
    total += Count{1};
    return false;
  });
  return total;
}

namespace detail {

// Injective edge-preserving maps from `pattern` into the rows of the host.
// Pattern vertices are placed in a connectivity-then-degree order; candidates
// intersect the host neighborhoods of all previously placed neighbors.
class EmbeddingCounter {
 public:
  EmbeddingCounter(const Graph& host, const Graph& pattern)
      : host_rows_(graph_rows(host)),
        n_(host.order()),
        k_(pattern.order()) {
    build_order(pattern);
  }

  Count count_all() {
    count_mode_ = true;
    total_ = Count{0};
    place(0, 0);
    return total_;
  }

  bool exists() {
    count_mode_ = false;
    return place(0, 0);
  }

  // Existence of a map sending the pattern edge pair (pa, pb) onto the fixed
  // host vertices (ha, hb); used for new-copy-through-edge checks.
  bool exists_with_pin(int pa, int ha, int pb, int hb) {
    count_mode_ = false;
    pin_a_ = pa;
    pin_va_ = ha;
    pin_b_ = pb;
    pin_vb_ = hb;
    bool found = place(0, 0);
    pin_a_ = pin_b_ = -1;
    return found;
  }

 private:
  void build_order(const Graph& pattern) {
    bool taken[kMaxOrder] = {};
    for (int i = 0; i < k_; ++i) {
      int best = -1, best_conn = -1, best_deg = -1;
      for (int v = 0; v < k_; ++v) {
        if (taken[v]) continue;
        int conn = 0;
        for (int j = 0; j < i; ++j)
          if (pattern.adjacent(v, order_[j])) ++conn;
        int deg = pattern.degree(v);
        if (conn > best_conn || (conn == best_conn && deg > best_deg)) {
          best = v;
          best_conn = conn;
          best_deg = deg;
        }
      }
      order_[i] = best;
      taken[best] = true;
      std::uint64_t earlier = 0;
      for (int j = 0; j < i; ++j)
        if (pattern.adjacent(best, order_[j]))
          earlier |= std::uint64_t{1} << j;
      earlier_nbrs_[i] = earlier;
      pat_deg_[i] = pattern.degree(best);
    }
  }

  bool place(int i, std::uint64_t used) {
    if (i == k_) {
      if (count_mode_) {
        total_ += Count{1};
        return false;
      }
      return true;
    }
    int pv = order_[i];
    std::uint64_t cand;
    if (pv == pin_a_)
      cand = std::uint64_t{1} << pin_va_;
    else if (pv == pin_b_)
      cand = std::uint64_t{1} << pin_vb_;
    else
      cand = below_mask(n_);
    cand &= ~used;
    for (std::uint64_t m = earlier_nbrs_[i]; m; m &= m - 1)
      cand &= host_rows_[image_[lowest_bit(m)]];
    while (cand) {
      int v = lowest_bit(cand);
      cand &= cand - 1;
      if (bit_count(host_rows_[v]) < pat_deg_[i]) continue;
      image_[i] = v;
      if (place(i + 1, used | std::uint64_t{1} << v)) return true;
    }
    return false;
  }

  std::array<std::uint64_t, kMaxOrder> host_rows_;
  int n_, k_;
  int order_[kMaxOrder] = {};
  std::uint64_t earlier_nbrs_[kMaxOrder] = {};
  int pat_deg_[kMaxOrder] = {};
  int image_[kMaxOrder] = {};
  bool count_mode_ = true;
  Count total_{0};
  int pin_a_ = -1, pin_va_ = -1, pin_b_ = -1, pin_vb_ = -1;
};

}  // namespace detail

inline Count count_subgraph_copies(const Graph& g, const Pattern& f) {
  switch (f.kind()) {
    case Pattern::Kind::Clique:
      return count_cliques(g, f.order());
    case Pattern::Kind::Cycle:
      return count_cycles(g, f.order());
    case Pattern::Kind::General: {
      Graph pat = f.as_graph();
      if (pat.order() > g.order()) return Count{0};
      detail::EmbeddingCounter ec(g, pat);
      Count maps = ec.count_all();
      Count aut = automorphism_count(pat);
      if (!(maps % aut == Count{0}))
        throw std::logic_error("count_subgraph_copies: inexact quotient");
      return maps / aut;
    }
  }
  throw std::logic_error("count_subgraph_copies: bad kind");
}

inline bool contains_copy(const Graph& g, const Pattern& f) {
  if (f.order() > g.order()) return false;
  switch (f.kind()) {
    case Pattern::Kind::Clique: {
      auto rows = detail::graph_rows(g);
      return detail::CliqueCounter(rows, g.order()).exists(f.order());
    }
    case Pattern::Kind::Cycle: {
      bool found = false;
      detail::for_each_cycle(g, f.order(), [&] {
        found = true;
        return true;
      });
      return found;
    }
    case Pattern::Kind::General: {
      detail::EmbeddingCounter ec(g, f.as_graph());
      return ec.exists();
    }
  }
  throw std::logic_error("contains_copy: bad kind");
}

inline bool creates_new_copy_through_edge(const Graph& g, EdgePair e,
                                          const Pattern& f) {
  int u = e.first, v = e.second;
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v)
    throw std::invalid_argument("creates_new_copy_through_edge: bad pair");
  if (g.adjacent(u, v))
    throw std::invalid_argument("creates_new_copy_through_edge: edge present");
  Graph plus = g.with_edge(u, v);
  Graph pat = f.as_graph();
  if (pat.order() > plus.order()) return false;
  detail::EmbeddingCounter ec(plus, pat);
  for (EdgePair pe : pat.edges()) {
    if (ec.exists_with_pin(pe.first, u, pe.second, v)) return true;
    if (ec.exists_with_pin(pe.first, v, pe.second, u)) return true;
  }
  return false;
}

inline EdgePartition classify_edges_by_clique(const Graph& g, int r) {
  if (r < 2) throw std::invalid_argument("classify_edges_by_clique: r < 2");
  auto rows = detail::graph_rows(g);
  detail::CliqueCounter cc(rows, g.order());
  EdgePartition part;
  for (EdgePair e : g.edges()) {
    std::uint64_t common = rows[e.first] & rows[e.second];
    if (cc.exists_within(common, r - 2))
      part.e1.push_back(e);
    else
      part.e2.push_back(e);
  }
  return part;
}

}  // namespace satlab
