#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "satlab/constructions.hpp"
#include "satlab/counting.hpp"
#include "satlab/family.hpp"
#include "satlab/graph.hpp"
#include "satlab/saturation.hpp"

using namespace satlab;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<EdgePair> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (coin(rng)) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<EdgePair> edges;
  int bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if (mask >> bit & 1) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

bool brute_has_clique(const Graph& g, int r) {
  int n = g.order();
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
    if (std::popcount(mask) != r) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (!(mask >> v & 1)) continue;
      for (int u = 0; u < v && ok; ++u)
        if ((mask >> u & 1) && !g.adjacent(u, v)) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

bool brute_clique_saturated(const Graph& g, int s) {
  if (brute_has_clique(g, s)) return false;
  for (EdgePair e : g.non_edges())
    if (!brute_has_clique(g.with_edge(e.first, e.second), s)) return false;
  return true;
}

Family typed_family(FamilyMember::Shape shape, const Graph& g, int m, int r) {
  FamilyMember mem;
  mem.graph = g;
  mem.shape = shape;
  mem.m = m;
  mem.r = r;
  Family fam;
  fam.members.push_back(mem);
  return fam;
}

Family generic_family(const Graph& g) {
  FamilyMember mem;
  mem.graph = g;
  mem.shape = FamilyMember::Shape::Generic;
  Family fam;
  fam.members.push_back(mem);
  return fam;
}

}  // namespace

TEST_CASE("saturation matches the labeled brute force") {
  for (int n = 2; n <= 5; ++n) {
    int bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      Graph g = graph_from_mask(n, mask);
      for (int s = 3; s <= 4; ++s) {
        REQUIRE(is_free(g, family_clique(s)) == !brute_has_clique(g, s));
        REQUIRE(is_saturated(g, family_clique(s)) ==
                brute_clique_saturated(g, s));
      }
    }
  }
  int bits6 = 15;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits6); ++mask) {
    Graph g = graph_from_mask(6, mask);
    REQUIRE(is_saturated(g, family_clique(3)) ==
            brute_clique_saturated(g, 3));
  }
}

TEST_CASE("shape detectors agree with generic embedding") {
  std::mt19937_64 rng(51001);
  struct Case {
    FamilyMember::Shape shape;
    Graph graph;
    int m, r;
  };
  std::vector<Case> cases = {
      {FamilyMember::Shape::Dumbbell, dumbbell(2), 2, 0},
      {FamilyMember::Shape::Dumbbell, dumbbell(3), 3, 0},
      {FamilyMember::Shape::Dumbbell, dumbbell(4), 4, 0},
      {FamilyMember::Shape::VPair, v_graph(4), 4, 0},
      {FamilyMember::Shape::VPair, v_graph(5), 5, 0},
      {FamilyMember::Shape::LambdaR, lambda_graph(4), 4, 2},
      {FamilyMember::Shape::LambdaR, lambda_graph(5), 5, 2},
      {FamilyMember::Shape::LambdaR, lambda_graph_r(6, 3, true), 6, 3},
      {FamilyMember::Shape::VOverlapR, v_graph_r(5, 3, true), 5, 3},
      {FamilyMember::Shape::VOverlapR, v_graph_r(6, 4, true), 6, 4},
  };
  for (const Case& c : cases) {
    Family typed = typed_family(c.shape, c.graph, c.m, c.r);
    Family generic = generic_family(c.graph);
    int base = c.graph.order();
    for (int iter = 0; iter < 60; ++iter) {
      int n = base - 1 + int(rng() % 4);
      Graph g = random_graph(n, 0.35 + 0.12 * double(rng() % 5), rng);
      REQUIRE(is_free(g, typed) == is_free(g, generic));
    }
    // Planted positives: the member itself, relabeled, under edge noise.
    std::vector<int> perm(base);
    for (int i = 0; i < base; ++i) perm[i] = i;
    for (int iter = 0; iter < 10; ++iter) {
      std::shuffle(perm.begin(), perm.end(), rng);
      Graph planted = c.graph.permuted(perm.data());
      for (EdgePair e : planted.non_edges())
        if (rng() % 3 == 0) planted = planted.with_edge(e.first, e.second);
      REQUIRE_FALSE(is_free(planted, typed));
    }
  }
}

TEST_CASE("extremal hosts are saturated") {
  const int cases[][2] = {{6, 3}, {10, 3}, {7, 4}, {8, 4}, {8, 5}, {10, 5}};
  for (auto [n, s] : cases) {
    Graph g = ehm_extremal(n, s);
    Family fam = family_clique(s);
    REQUIRE(is_free(g, fam));
    REQUIRE(is_saturated(g, fam));
    REQUIRE(is_strongly_saturated(g, Pattern::clique(s)));
  }
  Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  REQUIRE(is_saturated(c5, family_clique(3)));
  REQUIRE(is_strongly_saturated(c5, Pattern::clique(3)));
  REQUIRE_FALSE(is_saturated(Graph::complete(5), family_clique(4)));
  REQUIRE_FALSE(is_saturated(Graph::empty(5), family_clique(3)));
  REQUIRE(is_strongly_saturated(Graph::complete(5), Pattern::clique(3)));
}

TEST_CASE("disjoint clique covers are saturated for the bridged family") {
  Graph g = clique_union(8, 4);
  Family bridged = typed_family(FamilyMember::Shape::Dumbbell, dumbbell(4), 4, 0);
  REQUIRE(is_free(g, bridged));
  REQUIRE(is_saturated(g, bridged));
  REQUIRE(is_saturated(g, family_F(4)));
  REQUIRE(count_cycles(g, 5) == Count(0));
  REQUIRE_FALSE(is_strongly_saturated(g, Pattern::clique(4)));
}

TEST_CASE("apexed triangle unions are saturated for the bridged triangles") {
  Family bridged = typed_family(FamilyMember::Shape::Dumbbell, dumbbell(3), 3, 0);
  for (int t = 2; t <= 3; ++t) {
    Graph one = triangles_with_apex(t);
    REQUIRE(is_free(one, bridged));
    REQUIRE(is_saturated(one, bridged));
    REQUIRE(count_cycles(one, 4) == Count(0));

    Graph two = triangles_two_apexes(t);
    REQUIRE(is_free(two, bridged));
    REQUIRE(is_saturated(two, bridged));
    REQUIRE(count_cycles(two, 4) == Count(0));
  }
}

TEST_CASE("path plus matching misses saturation for the 3-edge path") {
  Graph g = path_union(7);
  Family p4 = typed_family(FamilyMember::Shape::Dumbbell, dumbbell(2), 2, 0);
  REQUIRE(is_free(g, p4));
  REQUIRE(count_cycles(g, 3) == Count(0));
  // The middle-path chord closes a triangle without creating a 3-edge path,
  // so the graph is free but not saturated.
  Graph chord = g.with_edge(0, 2);
  REQUIRE(is_free(chord, p4));
  REQUIRE_FALSE(is_saturated(g, p4));
}

TEST_CASE("low-clique edges stay low after any single addition") {
  REQUIRE(check_lemma2(ehm_extremal(7, 4), 3, 4).pass);
  REQUIRE(check_lemma2(ehm_extremal(7, 4), 2, 4).pass);
  REQUIRE(check_lemma2(ehm_extremal(8, 5), 4, 5).pass);
  Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  REQUIRE(check_lemma2(c5, 2, 3).pass);
  REQUIRE_THROWS_AS(check_lemma2(ehm_extremal(7, 4), 1, 4),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(check_lemma2(ehm_extremal(7, 4), 4, 4),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(check_lemma2(Graph::complete(4), 3, 4),
                    std::invalid_argument);
}

TEST_CASE("structure report on the clean disjoint cover") {
  StructureReport rep = family_structure_report(clique_union(8, 4), 4, 2);
  REQUIRE(rep.checks.size() == 3);
  REQUIRE(rep.all_pass());
  REQUIRE(rep.b_set == 0xffu);
  REQUIRE(rep.a_set == 0);
  for (const StructureCheck& c : rep.checks) REQUIRE(c.pass);
  REQUIRE(rep.checks[0].lemma == "b-disjoint-cliques");
  REQUIRE(rep.checks[1].lemma == "a-small-or-saturated");
  REQUIRE(rep.checks[2].lemma == "b-a-connection");
}

TEST_CASE("structure report flags oversized covered components") {
  StructureReport rep =
      family_structure_report(Graph::complete(5), 4, 2, nullptr);
  REQUIRE_FALSE(rep.all_pass());
  REQUIRE_FALSE(rep.checks[0].pass);
  REQUIRE(rep.checks[0].witness_vertices.size() == 5);
}

TEST_CASE("structure report validates its input") {
  REQUIRE_THROWS_AS(family_structure_report(path_union(7), 4, 2),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(family_structure_report(clique_union(8, 4), 1, 2, nullptr),
                    std::invalid_argument);
}

TEST_CASE("family validation") {
  Family empty;
  REQUIRE_THROWS_AS(is_free(Graph::complete(3), empty),
                    std::invalid_argument);
  Family tiny;
  FamilyMember one;
  one.graph = Graph::complete(1);
  tiny.members.push_back(one);
  REQUIRE_THROWS_AS(is_free(Graph::complete(3), tiny), std::invalid_argument);
}
