#pragma once

#include <algorithm>
#include <chrono>
#include <concepts>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "satlab/canonical.hpp"
#include "satlab/counting.hpp"
#include "satlab/family.hpp"
#include "satlab/graph.hpp"
#include "satlab/saturation.hpp"
#include "satlab/wide.hpp"

namespace satlab {

// One cell of the generation-tree partition: the first prefix_depth edge
// slots (in colex pair order: slot C(k,2)+j decides pair {j,k}) are pinned
// to the bits of prefix_index.
struct ShardSpec {
  int prefix_depth = 0;
  unsigned long long prefix_index = 0;
};

class SearchLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchLimits {
  // Skip any partial graph whose edge count already exceeds this. Sound for
  // edge minimization whenever the bound is at least the true minimum; the
  // bound is part of the config so sharded and unsharded runs stay identical.
  std::optional<long long> max_edges;
  std::optional<double> time_cap_seconds;
  std::optional<unsigned long long> memory_cap_bytes;
};

struct SearchConfig {
  int order = 1;
  Family family;
  Pattern target = Pattern::clique(2);
  std::optional<ShardSpec> shard;
  SearchLimits limits;
};

struct SearchResult {
  std::optional<Count> minimum;  // absent when nothing is saturated
  std::vector<CanonicalCode> extremal;
  unsigned long long examined = 0;
  unsigned long long saturated_count = 0;
};

// Hard ceiling for exhaustive enumeration; SATLAB_MAX_N raises or lowers it.
inline int exhaustive_order_cap() {
  if (const char* env = std::getenv("SATLAB_MAX_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v <= kMaxOrder)
      return static_cast<int>(v);
  }
  return 11;
}

namespace detail {

inline void validate_search_order(int n) {
  if (n < 0) throw std::invalid_argument("search: negative order");
  int cap = exhaustive_order_cap();
  if (n > cap)
    throw std::invalid_argument("search: order " + std::to_string(n) +
                                " exceeds exhaustive cap " +
                                std::to_string(cap));
}

inline void validate_shard(int n, const ShardSpec& shard) {
  long long slots = static_cast<long long>(n) * (n - 1) / 2;
  if (shard.prefix_depth < 0 || shard.prefix_depth >= slots)
    throw std::invalid_argument("shard: need 0 <= depth < C(n,2)");
  if (shard.prefix_depth < 64 &&
      shard.prefix_index >= (1ULL << shard.prefix_depth))
    throw std::invalid_argument("shard: index out of range for depth");
}

// Depth-first canonical augmentation. A graph on k vertices grows by one
// vertex whose neighborhood is a subset of {0..k-1}; subsets are filtered
// to one representative per Aut(parent)-orbit, and a child survives only
// when its new vertex lies in the same Aut(child)-orbit as the vertex in
// the last canonical position. Each isomorphism class then appears exactly
// once, as a deterministic labeled representative, so pinning prefix edge
// slots routes every class to exactly one shard.
template <class Visitor>
class AugmentationRun {
 public:
  AugmentationRun(int n, const ShardSpec* shard,
                  std::optional<long long> max_edges, Visitor& visit)
      : n_(n), shard_(shard), max_edges_(max_edges), visit_(visit) {}

  void run() {
    if (n_ == 0) {
      visit_(Graph::empty(0));
      return;
    }
    extend(Graph::empty(1));
  }

 private:
  struct LevelScratch {
    std::vector<std::uint8_t> seen;
    std::vector<std::uint32_t> queue;
  };

  bool shard_allows(int k, std::uint32_t mask) const {
    if (!shard_) return true;
    long long base = static_cast<long long>(k) * (k - 1) / 2;
    for (int j = 0; j < k; ++j) {
      long long slot = base + j;
      if (slot >= shard_->prefix_depth) break;
      bool want = (shard_->prefix_index >> slot) & 1ULL;
      bool have = (mask >> j) & 1U;
      if (want != have) return false;
    }
    return true;
  }

  void mark_orbit(std::uint32_t start, int k,
                  const std::vector<Perm>& gens, LevelScratch& scratch) {
    scratch.seen[start] = 1;
    if (gens.empty()) return;
    scratch.queue.clear();
    scratch.queue.push_back(start);
    while (!scratch.queue.empty()) {
      std::uint32_t m = scratch.queue.back();
      scratch.queue.pop_back();
      for (const Perm& g : gens) {
        std::uint32_t image = 0;
        std::uint32_t rest = m;
        while (rest != 0) {
          int v = lowest_bit(rest);
          rest &= rest - 1;
          image |= std::uint32_t(1) << g[v];
        }
        if (!scratch.seen[image]) {
          scratch.seen[image] = 1;
          scratch.queue.push_back(image);
        }
      }
    }
  }

  void extend(const Graph& g) {
    int k = g.order();
    if (k == n_) {
      visit_(g);
      return;
    }
    CanonicalInfo pinfo = canonical_info(g);
    long long parent_edges = g.edge_count();
    LevelScratch& scratch = levels_[k];
    std::uint32_t total = std::uint32_t(1) << k;
    scratch.seen.assign(total, 0);
    for (std::uint32_t s = 0; s < total; ++s) {
      if (scratch.seen[s]) continue;
      // Ascending sweep: first unseen mask is its orbit's minimum.
      mark_orbit(s, k, pinfo.generators, scratch);
      if (!shard_allows(k, s)) continue;
      if (max_edges_ && parent_edges + bit_count(s) > *max_edges_) continue;
      Graph child = g.with_vertex(s);
      CanonicalInfo cinfo = canonical_info(child);
      if (cinfo.same_orbit(k, cinfo.from_canonical[k])) extend(child);
    }
  }

  int n_;
  const ShardSpec* shard_;
  std::optional<long long> max_edges_;
  Visitor& visit_;
  std::array<LevelScratch, kMaxOrder> levels_;
};

}  // namespace detail

struct GenerationOptions {
  std::optional<ShardSpec> shard;
  std::optional<long long> max_edges;
};

// Streams exactly one representative per isomorphism class on n vertices,
// in a deterministic order.
template <class Visitor>
  requires std::invocable<Visitor&, const Graph&>
void generate_nonisomorphic(int n, Visitor&& visit,
                            const GenerationOptions& opts = {}) {
  detail::validate_search_order(n);
  if (opts.shard) detail::validate_shard(n, *opts.shard);
  detail::AugmentationRun<Visitor> runner(
      n, opts.shard ? &*opts.shard : nullptr, opts.max_edges, visit);
  runner.run();
}

inline std::vector<Graph> generate_nonisomorphic(int n) {
  std::vector<Graph> out;
  generate_nonisomorphic(n, [&out](const Graph& g) { out.push_back(g); });
  return out;
}

inline std::vector<ShardSpec> shard_prefixes(int n, int depth) {
  long long slots = static_cast<long long>(n) * (n - 1) / 2;
  if (depth < 0 || depth >= slots)
    throw std::invalid_argument("shard_prefixes: need 0 <= depth < C(n,2)");
  if (depth > 24)
    throw std::invalid_argument("shard_prefixes: depth too large to list");
  std::vector<ShardSpec> out;
  out.reserve(std::size_t(1) << depth);
  for (unsigned long long i = 0; i < (1ULL << depth); ++i)
    out.push_back(ShardSpec{depth, i});
  return out;
}

// Exact minimum of the target-pattern count over all family-saturated
// graphs on cfg.order vertices, with every minimizer's canonical code.
inline SearchResult min_count_over_saturated(const SearchConfig& cfg) {
  cfg.family.validate();
  detail::validate_search_order(cfg.order);
  if (cfg.shard) detail::validate_shard(cfg.order, *cfg.shard);

  SearchResult res;
  std::optional<Count> best;
  std::vector<CanonicalCode> codes;
  unsigned long long code_bytes = 0;
  auto started = std::chrono::steady_clock::now();

  auto visit = [&](const Graph& g) {
    ++res.examined;
    if (cfg.limits.time_cap_seconds && (res.examined & 1023) == 0) {
      std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - started;
      if (elapsed.count() > *cfg.limits.time_cap_seconds)
        throw SearchLimitExceeded("search: time cap exceeded");
    }
    if (!is_saturated(g, cfg.family)) return;
    ++res.saturated_count;
    Count c = count_subgraph_copies(g, cfg.target);
    if (!best || c < *best) {
      best = c;
      for (const CanonicalCode& old : codes) code_bytes -= old.code.size();
      codes.clear();
    } else if (c != *best) {
      return;
    }
    codes.push_back(canonical_code(g));
    code_bytes += codes.back().code.size();
    if (cfg.limits.memory_cap_bytes &&
        code_bytes > *cfg.limits.memory_cap_bytes)
      throw SearchLimitExceeded("search: memory cap exceeded");
  };

  GenerationOptions opts;
  opts.shard = cfg.shard;
  opts.max_edges = cfg.limits.max_edges;
  generate_nonisomorphic(cfg.order, visit, opts);

  std::sort(codes.begin(), codes.end());
  res.minimum = best;
  res.extremal = std::move(codes);
  return res;
}

// Minimum edge count over saturated graphs; edges are 2-clique copies.
inline SearchResult saturation_number(int n, const Family& fam) {
  SearchConfig cfg;
  cfg.order = n;
  cfg.family = fam;
  cfg.target = Pattern::clique(2);
  return min_count_over_saturated(cfg);
}

// Every achievable target count over saturated graphs, ascending.
inline std::vector<Count> spectrum(int n, const Family& fam,
                                   const Pattern& target) {
  fam.validate();
  detail::validate_search_order(n);
  std::set<Count> values;
  generate_nonisomorphic(n, [&](const Graph& g) {
    if (is_saturated(g, fam)) values.insert(count_subgraph_copies(g, target));
  });
  return std::vector<Count>(values.begin(), values.end());
}

// Deterministic reduce over shard results: min-then-union.
inline SearchResult merge_search_results(const std::vector<SearchResult>& parts) {
  SearchResult out;
  for (const SearchResult& p : parts) {
    out.examined += p.examined;
    out.saturated_count += p.saturated_count;
    if (!p.minimum) continue;
    if (!out.minimum || *p.minimum < *out.minimum) {
      out.minimum = p.minimum;
      out.extremal = p.extremal;
    } else if (*p.minimum == *out.minimum) {
      out.extremal.insert(out.extremal.end(), p.extremal.begin(),
                          p.extremal.end());
    }
  }
  std::sort(out.extremal.begin(), out.extremal.end());
  out.extremal.erase(std::unique(out.extremal.begin(), out.extremal.end()),
                     out.extremal.end());
  return out;
}

}  // namespace satlab
