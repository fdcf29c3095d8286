#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "satlab/canonical.hpp"
#include "satlab/graph.hpp"
#include "satlab/wide.hpp"

using namespace satlab;

namespace {

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g = Graph::empty(n);
  int i = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++i)
      if (mask >> i & 1) g = g.with_edge(u, v);
  return g;
}

std::uint64_t edge_mask(const Graph& g) {
  std::uint64_t m = 0;
  int i = 0;
  for (int v = 1; v < g.order(); ++v)
    for (int u = 0; u < v; ++u, ++i)
      if (g.adjacent(u, v)) m |= std::uint64_t(1) << i;
  return m;
}

// Independent oracle: minimum edge mask over every relabeling.
std::uint64_t brute_canonical_mask(const Graph& g) {
  int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t(0);
  do {
    best = std::min(best, edge_mask(g.permuted(perm.data())));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

long long brute_automorphisms(const Graph& g) {
  int n = g.order();
  std::uint64_t self = edge_mask(g);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0;
  do {
    if (edge_mask(g.permuted(perm.data())) == self) ++total;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<EdgePair> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (coin(rng)) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.permuted(perm.data());
}

Graph petersen() {
  std::vector<EdgePair> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph::from_edges(10, edges);
}

}  // namespace

TEST_CASE("canonical code refines exactly like the relabeling oracle") {
  for (int n = 0; n <= 5; ++n) {
    int pairs = n * (n - 1) / 2;
    std::map<std::uint64_t, std::string> brute_to_code;
    std::map<std::string, std::uint64_t> code_to_brute;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs); ++mask) {
      Graph g = graph_from_mask(n, mask);
      std::uint64_t key = brute_canonical_mask(g);
      std::string code = canonical_code(g).code;
      auto [it, fresh] = brute_to_code.emplace(key, code);
      REQUIRE(it->second == code);
      auto [jt, fresh2] = code_to_brute.emplace(code, key);
      REQUIRE(jt->second == key);
    }
    if (n == 4) REQUIRE(brute_to_code.size() == 11);
    if (n == 5) REQUIRE(brute_to_code.size() == 34);
  }
}

TEST_CASE("canonical code class count at n = 6") {
  std::set<std::string> codes;
  for (std::uint64_t mask = 0; mask < (1u << 15); ++mask)
    codes.insert(canonical_code(graph_from_mask(6, mask)).code);
  REQUIRE(codes.size() == 156);
}

TEST_CASE("canonical code is relabeling invariant") {
  std::mt19937_64 rng(77001);
  for (int iter = 0; iter < 400; ++iter) {
    int n = 1 + int(rng() % 12);
    Graph g = random_graph(n, 0.2 + 0.6 * (rng() % 3), rng);
    Graph h = shuffled(g, rng);
    REQUIRE(canonical_code(g) == canonical_code(h));
    REQUIRE(canonical_form(g) == canonical_form(h));
  }
}

TEST_CASE("canonical info permutations are consistent") {
  std::mt19937_64 rng(77002);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 1 + int(rng() % 10);
    Graph g = random_graph(n, 0.5, rng);
    CanonicalInfo info = canonical_info(g);
    REQUIRE(info.order == n);
    for (int v = 0; v < n; ++v) {
      REQUIRE(info.from_canonical[info.to_canonical[v]] == v);
      REQUIRE(info.to_canonical[info.from_canonical[v]] == v);
    }
    int perm[kMaxOrder];
    for (int v = 0; v < n; ++v) perm[v] = info.to_canonical[v];
    REQUIRE(g.permuted(perm) == canonical_form(g));
    for (const Perm& gen : info.generators) {
      int p[kMaxOrder];
      for (int v = 0; v < n; ++v) p[v] = gen[v];
      REQUIRE(g.permuted(p) == g);
    }
  }
}

TEST_CASE("vertex orbits match hand-checked symmetric graphs") {
  Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CanonicalInfo ic5 = canonical_info(c5);
  for (int v = 1; v < 5; ++v) REQUIRE(ic5.same_orbit(0, v));

  Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CanonicalInfo ip4 = canonical_info(p4);
  REQUIRE(ip4.same_orbit(0, 3));
  REQUIRE(ip4.same_orbit(1, 2));
  REQUIRE_FALSE(ip4.same_orbit(0, 1));
  REQUIRE_FALSE(ip4.same_orbit(0, 2));

  Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CanonicalInfo is = canonical_info(star);
  for (int v = 1; v < 5; ++v) {
    REQUIRE_FALSE(is.same_orbit(0, v));
    REQUIRE(is.same_orbit(1, v));
  }
}

TEST_CASE("automorphism count equals the relabeling oracle") {
  for (int n = 0; n <= 5; ++n) {
    int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs); ++mask) {
      Graph g = graph_from_mask(n, mask);
      REQUIRE(automorphism_count(g) ==
              Count(std::uint64_t(brute_automorphisms(g))));
    }
  }
  std::mt19937_64 rng(77003);
  for (int iter = 0; iter < 60; ++iter) {
    Graph g = random_graph(6, 0.5, rng);
    REQUIRE(automorphism_count(g) ==
            Count(std::uint64_t(brute_automorphisms(g))));
  }
  for (int iter = 0; iter < 10; ++iter) {
    Graph g = random_graph(7, 0.4, rng);
    REQUIRE(automorphism_count(g) ==
            Count(std::uint64_t(brute_automorphisms(g))));
  }
}

TEST_CASE("automorphism count on named graphs") {
  REQUIRE(automorphism_count(Graph::complete(4)) == Count(24));
  Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  REQUIRE(automorphism_count(c4) == Count(8));
  Graph path4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  REQUIRE(automorphism_count(path4) == Count(2));
  Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  REQUIRE(automorphism_count(c5) == Count(10));
  REQUIRE(automorphism_count(petersen()) == Count(120));
  Graph k33 = join(Graph::empty(3), Graph::empty(3));
  REQUIRE(automorphism_count(k33) == Count(72));
  REQUIRE(automorphism_count(Graph::empty(6)) == Count(720));
  Count fact30(1);
  for (std::uint64_t i = 2; i <= 30; ++i) fact30 *= Count(i);
  REQUIRE(automorphism_count(Graph::complete(30)) == fact30);
  REQUIRE_THROWS_AS(automorphism_count(Graph::complete(40)),
                    std::overflow_error);
}

TEST_CASE("canonical codes separate known non-isomorphic pairs") {
  // Same degree sequence, different graphs: C6 versus two triangles.
  Graph c6 = Graph::from_edges(
      6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  Graph tt = disjoint_union(Graph::complete(3), Graph::complete(3));
  REQUIRE(canonical_code(c6) != canonical_code(tt));
  // 4-regular pair on 8 vertices: K_{4,4} versus the complement of C8.
  Graph k44 = join(Graph::empty(4), Graph::empty(4));
  Graph c8 = Graph::from_edges(8, {{0, 1},
                                   {1, 2},
                                   {2, 3},
                                   {3, 4},
                                   {4, 5},
                                   {5, 6},
                                   {6, 7},
                                   {7, 0}});
  REQUIRE(canonical_code(k44) != canonical_code(c8.complement()));
  REQUIRE(automorphism_count(k44) == Count(2 * 24 * 24));
}

TEST_CASE("canonical form is a fixed point") {
  std::mt19937_64 rng(77004);
  for (int iter = 0; iter < 100; ++iter) {
    int n = 1 + int(rng() % 11);
    Graph g = random_graph(n, 0.5, rng);
    Graph cf = canonical_form(g);
    REQUIRE(canonical_form(cf) == cf);
    REQUIRE(canonical_code(cf) == canonical_code(g));
  }
}
