#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "satlab/graph.hpp"
#include "satlab/graph6.hpp"
#include "satlab/wide.hpp"

namespace satlab {

// Canonical form identifier: the graph6 string of a distinguished
// representative of the isomorphism class.  Equal codes iff isomorphic.
struct CanonicalCode {
  std::string code;
  auto operator<=>(const CanonicalCode&) const = default;
};

using Perm = std::array<std::uint8_t, kMaxOrder>;

// Byproducts of the canonical search.  `to_canonical` relabels the input to
// its canonical form; `orbit` maps each vertex to its orbit representative
// under the automorphism group; `generators` generate the full group.
struct CanonicalInfo {
  int order = 0;
  std::array<std::uint8_t, kMaxOrder> to_canonical{};
  std::array<std::uint8_t, kMaxOrder> from_canonical{};
  std::array<std::uint8_t, kMaxOrder> orbit{};
  std::vector<Perm> generators;
  bool same_orbit(int u, int v) const { return orbit[u] == orbit[v]; }
};

namespace detail {

// Ordered partition of positions 0..n-1: lab lists vertices, a set bit at
// position p in `bounds` means a cell ends at p.
struct Partition {
  std::array<std::uint8_t, kMaxOrder> lab;
  std::uint64_t bounds = 0;
};

class CanonSearcher {
 public:
  explicit CanonSearcher(const Graph& g) : n_(g.order()) {
    for (int v = 0; v < n_; ++v) adj_[v] = g.row(v);
  }

  void run() {
    if (n_ == 0) return;
    Partition part;
    for (int v = 0; v < n_; ++v) part.lab[v] = static_cast<std::uint8_t>(v);
    part.bounds = std::uint64_t{1} << (n_ - 1);
    refine(part);
    dfs(part, 0);
  }

  int order_n() const { return n_; }
  const std::array<std::uint8_t, kMaxOrder>& best_lab() const {
    return best_lab_;
  }
  std::vector<Perm> take_generators() { return std::move(gens_); }

 private:
  bool discrete(const Partition& p) const {
    return p.bounds == below_mask(n_);
  }

  // Equitable refinement: repeatedly split every cell by neighbor counts
  // into snapshot splitter cells, ascending count order, until stable.
  void refine(Partition& p) const {
    std::uint64_t splitters[kMaxOrder];
    int key[kMaxOrder];
    for (bool changed = true; changed;) {
      changed = false;
      int ns = 0;
      {
        int s = 0;
        for (int i = 0; i < n_; ++i) {
          if (!(p.bounds >> i & 1)) continue;
          std::uint64_t m = 0;
          for (int j = s; j <= i; ++j) m |= std::uint64_t{1} << p.lab[j];
          splitters[ns++] = m;
          s = i + 1;
        }
      }
      for (int w = 0; w < ns; ++w) {
        std::uint64_t W = splitters[w];
        int s = 0;
        for (int e = 0; e < n_; ++e) {
          if (!(p.bounds >> e & 1)) continue;
          if (e > s) {
            bool uniform = true;
            key[s] = bit_count(adj_[p.lab[s]] & W);
            for (int i = s + 1; i <= e; ++i) {
              key[i] = bit_count(adj_[p.lab[i]] & W);
              if (key[i] != key[s]) uniform = false;
            }
            if (!uniform) {
              for (int i = s + 1; i <= e; ++i) {  // stable insertion sort
                int kv = key[i];
                std::uint8_t lv = p.lab[i];
                int j = i - 1;
                while (j >= s && key[j] > kv) {
                  key[j + 1] = key[j];
                  p.lab[j + 1] = p.lab[j];
                  --j;
                }
                key[j + 1] = kv;
                p.lab[j + 1] = lv;
              }
              for (int i = s; i < e; ++i)
                if (key[i] != key[i + 1]) p.bounds |= std::uint64_t{1} << i;
              changed = true;
            }
          }
          s = e + 1;
        }
      }
    }
  }

  void encode_leaf(const Partition& p,
                   std::array<std::uint64_t, kMaxOrder>& enc) const {
    std::uint8_t inv[kMaxOrder];
    for (int i = 0; i < n_; ++i) inv[p.lab[i]] = static_cast<std::uint8_t>(i);
    for (int i = 0; i < n_; ++i) {
      std::uint64_t out = 0;
      for (std::uint64_t m = adj_[p.lab[i]]; m; m &= m - 1)
        out |= std::uint64_t{1} << inv[lowest_bit(m)];
      enc[i] = out;
    }
  }

  int compare_enc(const std::array<std::uint64_t, kMaxOrder>& a,
                  const std::array<std::uint64_t, kMaxOrder>& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  void add_generator(const Perm& g) {
    for (const Perm& h : gens_) {
      bool eq = true;
      for (int v = 0; v < n_; ++v)
        if (h[v] != g[v]) {
          eq = false;
          break;
        }
      if (eq) return;
    }
    gens_.push_back(g);
  }

  // Leaves related by an automorphism carry equal encodings, so equality
  // against the first leaf (or the best one) recovers a generator.  Every
  // subtree runs to completion; the only skipping anywhere is the orbit
  // pruning in dfs, which keeps the discovered set generating the full
  // group.
  void handle_leaf(const Partition& p, int depth) {
    std::array<std::uint64_t, kMaxOrder> enc;
    encode_leaf(p, enc);
    if (!have_leaf_) {
      have_leaf_ = true;
      zeta_enc_ = best_enc_ = enc;
      zeta_lab_ = best_lab_ = p.lab;
      return;
    }
    if (compare_enc(enc, zeta_enc_) == 0) {
      Perm g;
      for (int i = 0; i < n_; ++i) g[p.lab[i]] = zeta_lab_[i];
      add_generator(g);
      return;
    }
    int c = compare_enc(enc, best_enc_);
    if (c == 0) {
      Perm g;
      for (int i = 0; i < n_; ++i) g[p.lab[i]] = best_lab_[i];
      add_generator(g);
      return;
    }
    if (c < 0) {
      best_enc_ = enc;
      best_lab_ = p.lab;
    }
  }

  // Union-find over vertices, built from generators fixing the current
  // individualization prefix pointwise; prunes equivalent branch candidates.
  struct Dsu {
    std::array<std::uint8_t, kMaxOrder> parent;
    void init(int n) {
      for (int v = 0; v < n; ++v) parent[v] = static_cast<std::uint8_t>(v);
    }
    int find(int v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
      }
      return v;
    }
    void unite(int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) parent[b] = static_cast<std::uint8_t>(a);
    }
  };

  void build_prefix_dsu(Dsu& dsu, int depth) const {
    dsu.init(n_);
    for (const Perm& g : gens_) {
      bool fixes = true;
      for (int i = 0; i < depth; ++i)
        if (g[cur_path_[i]] != cur_path_[i]) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v)
        if (g[v] != v) dsu.unite(v, g[v]);
    }
  }

  void dfs(const Partition& part, int depth) {
    if (discrete(part)) {
      handle_leaf(part, depth);
      return;
    }
    int s = 0, e = 0;
    for (int i = 0;; ++i) {  // first non-singleton cell
      if (part.bounds >> i & 1) {
        if (i > s) {
          e = i;
          break;
        }
        s = i + 1;
      }
    }
    std::uint8_t cand[kMaxOrder];
    int nc = e - s + 1;
    for (int i = 0; i < nc; ++i) cand[i] = part.lab[s + i];
    std::uint8_t tried[kMaxOrder];
    int nt = 0;
    Dsu dsu;
    std::size_t dsu_gens = static_cast<std::size_t>(-1);
    for (int i = 0; i < nc; ++i) {
      std::uint8_t v = cand[i];
      if (nt > 0) {
        if (dsu_gens != gens_.size()) {
          build_prefix_dsu(dsu, depth);
          dsu_gens = gens_.size();
        }
        bool skip = false;
        int rv = dsu.find(v);
        for (int t = 0; t < nt && !skip; ++t)
          if (dsu.find(tried[t]) == rv) skip = true;
        if (skip) continue;
      }
      Partition child = part;
      int at = s;
      while (child.lab[at] != v) ++at;
      for (int j = at; j > s; --j) child.lab[j] = child.lab[j - 1];
      child.lab[s] = v;
      child.bounds |= std::uint64_t{1} << s;
      refine(child);
      cur_path_[depth] = v;
      dfs(child, depth + 1);
      tried[nt++] = v;
    }
  }

  int n_;
  std::array<std::uint64_t, kMaxOrder> adj_{};

  bool have_leaf_ = false;
  std::array<std::uint64_t, kMaxOrder> zeta_enc_{}, best_enc_{};
  std::array<std::uint8_t, kMaxOrder> zeta_lab_{}, best_lab_{};
  std::array<std::uint8_t, kMaxOrder> cur_path_{};
  std::vector<Perm> gens_;
};

}  // namespace detail

inline CanonicalInfo canonical_info(const Graph& g) {
  detail::CanonSearcher s(g);
  s.run();
  CanonicalInfo info;
  int n = g.order();
  info.order = n;
  info.generators = s.take_generators();
  for (int p = 0; p < n; ++p) {
    info.from_canonical[p] = s.best_lab()[p];
    info.to_canonical[s.best_lab()[p]] = static_cast<std::uint8_t>(p);
  }
  // Orbits: union-find closure over the generator set.
  std::array<std::uint8_t, kMaxOrder> parent{};
  for (int v = 0; v < n; ++v) parent[v] = static_cast<std::uint8_t>(v);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const Perm& gen : info.generators)
    for (int v = 0; v < n; ++v) {
      int a = find(v), b = find(gen[v]);
      if (a != b) parent[b] = static_cast<std::uint8_t>(a);
    }
  for (int v = 0; v < n; ++v)
    info.orbit[v] = static_cast<std::uint8_t>(find(v));
  return info;
}

inline Graph canonical_form(const Graph& g) {
  CanonicalInfo info = canonical_info(g);
  int perm[kMaxOrder];
  for (int v = 0; v < g.order(); ++v) perm[v] = info.to_canonical[v];
  return g.permuted(perm);
}

inline CanonicalCode canonical_code(const Graph& g) {
  return CanonicalCode{encode_graph6(canonical_form(g))};
}

namespace detail {

inline Perm perm_identity(int n) {
  Perm p{};
  for (int v = 0; v < n; ++v) p[v] = static_cast<std::uint8_t>(v);
  return p;
}

inline Perm perm_compose(const Perm& f, const Perm& g, int n) {
  Perm r{};  // r = f after g: r[v] = f[g[v]]
  for (int v = 0; v < n; ++v) r[v] = f[g[v]];
  return r;
}

inline Perm perm_inverse(const Perm& f, int n) {
  Perm r{};
  for (int v = 0; v < n; ++v) r[f[v]] = static_cast<std::uint8_t>(v);
  return r;
}

inline bool perm_is_identity(const Perm& f, int n) {
  for (int v = 0; v < n; ++v)
    if (f[v] != v) return false;
  return true;
}

// |<gens>| by Schreier's lemma, applied level by level: the order is the
// base-point orbit size times the order of the point stabilizer, and the
// stabilizer is generated exactly by t_{g(x)}^{-1} g t_x over orbit points x
// and generators g.  Generator lists stay small here (graph automorphism
// groups at order <= 64), so the textbook recursion with deduplication is
// enough.
inline Count group_order(int n, std::vector<Perm> gens) {
  Count total{1};
  std::set<Perm> dedup;
  for (;;) {
    std::vector<Perm> active;
    dedup.clear();
    for (const Perm& g : gens)
      if (!perm_is_identity(g, n) && dedup.insert(g).second)
        active.push_back(g);
    if (active.empty()) return total;
    int base = -1;
    for (int v = 0; v < n && base < 0; ++v)
      for (const Perm& g : active)
        if (g[v] != v) {
          base = v;
          break;
        }
    std::array<int, kMaxOrder> where;
    where.fill(-1);
    std::vector<int> orbit{base};
    std::vector<Perm> trans{perm_identity(n)};
    where[base] = 0;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const Perm& g : active) {
        int y = g[orbit[i]];
        if (where[y] < 0) {
          where[y] = static_cast<int>(orbit.size());
          orbit.push_back(y);
          trans.push_back(perm_compose(g, trans[i], n));
        }
      }
    }
    total *= Count{static_cast<std::uint64_t>(orbit.size())};
    std::vector<Perm> next;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const Perm& g : active) {
        int y = g[orbit[i]];
        next.push_back(perm_compose(perm_inverse(trans[where[y]], n),
                                    perm_compose(g, trans[i], n), n));
      }
    }
    gens = std::move(next);
  }
}

}  // namespace detail

// |Aut(g)| as an exact integer.  Throws std::overflow_error beyond 128 bits
// (only reachable for near-(anti)complete graphs of order > 34).
inline Count automorphism_count(const Graph& g) {
  int n = g.order();
  if (n <= 1) return Count{1};
  int ec = g.edge_count();
  if (ec == 0 || ec == n * (n - 1) / 2) {  // K_n / complement: n!
    Count f{1};
    for (int i = 2; i <= n; ++i) f *= Count{static_cast<std::uint64_t>(i)};
    return f;
  }
  CanonicalInfo info = canonical_info(g);
  return detail::group_order(n, info.generators);
}

}  // namespace satlab
