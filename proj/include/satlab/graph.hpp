#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace satlab {

inline constexpr int kMaxOrder = 64;

using EdgePair = std::pair<int, int>;  // always u < v in outputs

// Popcount / bit-scan helpers over vertex bitmasks.
inline int bit_count(std::uint64_t m) { return std::popcount(m); }
inline int lowest_bit(std::uint64_t m) { return std::countr_zero(m); }
inline std::uint64_t below_mask(int v) {  // bits 0..v-1
  return (v >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << v) - 1);
}

// Immutable simple undirected graph on 0-based dense labels, order <= 64.
// One adjacency row per vertex fits a machine word, so neighborhood
// intersections are single AND instructions.
class Graph {
 public:
  Graph() = default;

  static Graph empty(int n) {
    check_order(n);
    Graph g;
    g.n_ = n;
    return g;
  }

  static Graph complete(int n) {
    check_order(n);
    Graph g;
    g.n_ = n;
    std::uint64_t all = below_mask(n);
    for (int v = 0; v < n; ++v) g.rows_[v] = all & ~(std::uint64_t{1} << v);
    return g;
  }

  static Graph from_edges(int n, const std::vector<EdgePair>& edges) {
    check_order(n);
    Graph g;
    g.n_ = n;
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("from_edges: endpoint out of range");
      if (u == v) throw std::invalid_argument("from_edges: self-loop");
      g.rows_[u] |= std::uint64_t{1} << v;  // duplicates collapse
      g.rows_[v] |= std::uint64_t{1} << u;
    }
    return g;
  }

  int order() const { return n_; }

  bool adjacent(int u, int v) const { return rows_[u] >> v & 1; }
  std::uint64_t row(int v) const { return rows_[v]; }
  int degree(int v) const { return bit_count(rows_[v]); }

  int edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += bit_count(rows_[v]);
    return total / 2;
  }

  std::uint64_t vertex_mask() const { return below_mask(n_); }

  std::vector<EdgePair> edges() const {
    std::vector<EdgePair> out;
    for (int u = 0; u < n_; ++u)
      for (std::uint64_t m = rows_[u] & ~below_mask(u + 1); m; m &= m - 1)
        out.emplace_back(u, lowest_bit(m));
    return out;
  }

  // All pairs u < v with no edge, lexicographic.
  std::vector<EdgePair> non_edges() const {
    std::vector<EdgePair> out;
    for (int u = 0; u < n_; ++u) {
      std::uint64_t m = vertex_mask() & ~rows_[u] & ~below_mask(u + 1);
      for (; m; m &= m - 1) out.emplace_back(u, lowest_bit(m));
    }
    return out;
  }

  Graph with_edge(int u, int v) const {
    Graph g = *this;
    g.rows_[u] |= std::uint64_t{1} << v;
    g.rows_[v] |= std::uint64_t{1} << u;
    return g;
  }

  // Appends vertex n with the given neighborhood (bits < current order).
  Graph with_vertex(std::uint64_t nbrs) const {
    if (n_ >= kMaxOrder) throw std::invalid_argument("with_vertex: order 64");
    Graph g = *this;
    g.rows_[n_] = nbrs & vertex_mask();
    for (std::uint64_t m = g.rows_[n_]; m; m &= m - 1)
      g.rows_[lowest_bit(m)] |= std::uint64_t{1} << n_;
    g.n_ = n_ + 1;
    return g;
  }

  Graph complement() const {
    Graph g;
    g.n_ = n_;
    std::uint64_t all = vertex_mask();
    for (int v = 0; v < n_; ++v)
      g.rows_[v] = all & ~rows_[v] & ~(std::uint64_t{1} << v);
    return g;
  }

  // Relabels: vertex v of *this becomes perm[v] in the result.
  Graph permuted(const int* perm) const {
    Graph g;
    g.n_ = n_;
    for (int v = 0; v < n_; ++v) {
      std::uint64_t out = 0;
      for (std::uint64_t m = rows_[v]; m; m &= m - 1)
        out |= std::uint64_t{1} << perm[lowest_bit(m)];
      g.rows_[perm[v]] = out;
    }
    return g;
  }

  // Induced subgraph on the masked vertices, relabeled densely in mask order.
  Graph induced(std::uint64_t mask) const {
    mask &= vertex_mask();
    Graph g;
    g.n_ = bit_count(mask);
    int idx[kMaxOrder];
    int j = 0;
    for (std::uint64_t m = mask; m; m &= m - 1) idx[lowest_bit(m)] = j++;
    for (std::uint64_t m = mask; m; m &= m - 1) {
      int v = lowest_bit(m);
      std::uint64_t out = 0;
      for (std::uint64_t w = rows_[v] & mask; w; w &= w - 1)
        out |= std::uint64_t{1} << idx[lowest_bit(w)];
      g.rows_[idx[v]] = out;
    }
    return g;
  }

  friend Graph join(const Graph& a, const Graph& b) {
    if (a.n_ + b.n_ > kMaxOrder)
      throw std::invalid_argument("join: combined order > 64");
    Graph g = disjoint_union(a, b);
    std::uint64_t left = below_mask(a.n_);
    std::uint64_t right = below_mask(g.n_) & ~left;
    for (int v = 0; v < a.n_; ++v) g.rows_[v] |= right;
    for (int v = a.n_; v < g.n_; ++v) g.rows_[v] |= left;
    return g;
  }

  friend Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.n_ + b.n_ > kMaxOrder)
      throw std::invalid_argument("disjoint_union: combined order > 64");
    Graph g = a;
    g.n_ = a.n_ + b.n_;
    for (int v = 0; v < b.n_; ++v) g.rows_[a.n_ + v] = b.rows_[v] << a.n_;
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.rows_[v] != b.rows_[v]) return false;
    return true;
  }

 private:
  static void check_order(int n) {
    if (n < 0 || n > kMaxOrder)
      throw std::invalid_argument("graph order must be in [0, 64]");
  }

  int n_ = 0;
  std::array<std::uint64_t, kMaxOrder> rows_{};
};

}  // namespace satlab
