#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "satlab/family.hpp"
#include "satlab/graph.hpp"

namespace satlab {

// K_{s-2} * complement(K_{n-s+2}); clique vertices labeled 0..s-3.
inline Graph ehm_extremal(int n, int s) {
  if (s < 2) throw std::invalid_argument("ehm_extremal: s < 2");
  if (n < s) throw std::invalid_argument("ehm_extremal: n < s");
  if (n > kMaxOrder) throw std::invalid_argument("ehm_extremal: n > 64");
  return join(Graph::complete(s - 2), Graph::empty(n - s + 2));
}

// (K_{s-1} minus one edge) * complement(K_{n-s+1}); the missing edge joins
// the two highest-labeled near-clique vertices.
inline Graph remark_near_extremal(int n, int s) {
  if (s < 3) throw std::invalid_argument("remark_near_extremal: s < 3");
  if (n < s) throw std::invalid_argument("remark_near_extremal: n < s");
  if (n > kMaxOrder) throw std::invalid_argument("remark_near_extremal: n > 64");
  std::vector<EdgePair> es;
  for (int u = 0; u < s - 1; ++u)
    for (int v = u + 1; v < s - 1; ++v)
      if (!(u == s - 3 && v == s - 2)) es.push_back({u, v});
  return join(Graph::from_edges(s - 1, es), Graph::empty(n - s + 1));
}

// B_{m,m}: disjoint K_m's on {0..m-1} and {m..2m-1} bridged by edge (0, m).
// Accepts every m >= 2 (the 4-vertex case is the 3-edge path).
inline Graph dumbbell(int m) {
  if (m < 2) throw std::invalid_argument("dumbbell: m < 2");
  if (2 * m > kMaxOrder) throw std::invalid_argument("dumbbell: order > 64");
  Graph g = disjoint_union(Graph::complete(m), Graph::complete(m));
  return g.with_edge(0, m);
}

// V_m: K_m on {0..m-1} plus pendant vertices m, m+1 both joined to vertex 0.
inline Graph v_graph(int m) {
  if (m < 4) throw std::invalid_argument("v_graph: m < 4");
  if (m + 2 > kMaxOrder) throw std::invalid_argument("v_graph: order > 64");
  return Graph::complete(m).with_vertex(std::uint64_t{1}).with_vertex(
      std::uint64_t{1});
}

// Lambda_m: K_m on {0..m-1} plus vertex m adjacent to vertices 0 and 1.
inline Graph lambda_graph(int m) {
  if (m < 4) throw std::invalid_argument("lambda_graph: m < 4");
  if (m + 1 > kMaxOrder) throw std::invalid_argument("lambda_graph: order > 64");
  return Graph::complete(m).with_vertex(std::uint64_t{3});
}

// V_{m,r}: K_m on {0..m-1} and K_{m-r+1} sharing exactly vertex 0.
inline Graph v_graph_r(int m, int r, bool permissive = false) {
  if (r < 2) throw std::invalid_argument("v_graph_r: r < 2");
  int floor_m = permissive ? r + 2 : 2 * r * r + 2 * r;
  if (m < floor_m) throw std::invalid_argument("v_graph_r: m below range");
  int order = 2 * m - r;
  if (order > kMaxOrder) throw std::invalid_argument("v_graph_r: order > 64");
  std::vector<EdgePair> es;
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) es.push_back({u, v});
  std::vector<int> second;  // the K_{m-r+1}: vertex 0 plus m-r new vertices
  second.push_back(0);
  for (int i = 0; i < m - r; ++i) second.push_back(m + i);
  for (std::size_t a = 0; a < second.size(); ++a)
    for (std::size_t b = a + 1; b < second.size(); ++b)
      es.push_back({second[a], second[b]});
  return Graph::from_edges(order, es);
}

// Lambda_{m,r}: K_m on {0..m-1} plus vertex m adjacent to 0..r-1.
inline Graph lambda_graph_r(int m, int r, bool permissive = false) {
  if (r < 2) throw std::invalid_argument("lambda_graph_r: r < 2");
  int floor_m = permissive ? r + 2 : 2 * r * r + 2 * r;
  if (m < floor_m) throw std::invalid_argument("lambda_graph_r: m below range");
  if (m + 1 > kMaxOrder)
    throw std::invalid_argument("lambda_graph_r: order > 64");
  return Graph::complete(m).with_vertex(below_mask(r));
}

// F_{r,j}: two K_r's overlapping in exactly j vertices (the j highest labels
// of the first clique).
inline Graph overlap_cliques(int r, int j) {
  if (j < 1 || j > r - 1)
    throw std::invalid_argument("overlap_cliques: j out of range");
  int order = 2 * r - j;
  if (order > kMaxOrder)
    throw std::invalid_argument("overlap_cliques: order > 64");
  std::vector<EdgePair> es;
  for (int u = 0; u < r; ++u)
    for (int v = u + 1; v < r; ++v) es.push_back({u, v});
  std::vector<int> second;  // shared block r-j..r-1, then new vertices
  for (int i = r - j; i < r; ++i) second.push_back(i);
  for (int i = r; i < order; ++i) second.push_back(i);
  for (std::size_t a = 0; a < second.size(); ++a)
    for (std::size_t b = a + 1; b < second.size(); ++b)
      if (!(second[a] < r && second[b] < r))  // shared edges exist already
        es.push_back({second[a], second[b]});
  return Graph::from_edges(order, es);
}

// n/m disjoint K_m's on consecutive vertex blocks.
inline Graph clique_union(int n, int m) {
  if (m < 2) throw std::invalid_argument("clique_union: m < 2");
  if (n % m != 0) throw std::invalid_argument("clique_union: m does not divide n");
  if (n > kMaxOrder) throw std::invalid_argument("clique_union: n > 64");
  Graph g = Graph::empty(0);
  for (int b = 0; b < n / m; ++b) g = disjoint_union(g, Graph::complete(m));
  return g;
}

// t disjoint triangles (3j, 3j+1, 3j+2) plus apex 3t joined to each 3j.
inline Graph triangles_with_apex(int t) {
  if (t < 2) throw std::invalid_argument("triangles_with_apex: t < 2");
  int order = 3 * t + 1;
  if (order > kMaxOrder)
    throw std::invalid_argument("triangles_with_apex: order > 64");
  std::vector<EdgePair> es;
  for (int j = 0; j < t; ++j) {
    es.push_back({3 * j, 3 * j + 1});
    es.push_back({3 * j + 1, 3 * j + 2});
    es.push_back({3 * j, 3 * j + 2});
    es.push_back({3 * t, 3 * j});
  }
  return Graph::from_edges(order, es);
}

// t disjoint triangles (x_j, y_j, z_j) = (3j, 3j+1, 3j+2), apex a = 3t joined
// to every x_j, apex b = 3t+1 joined to x_0 and to y_j for j >= 1.
inline Graph triangles_two_apexes(int t) {
  if (t < 2) throw std::invalid_argument("triangles_two_apexes: t < 2");
  int order = 3 * t + 2;
  if (order > kMaxOrder)
    throw std::invalid_argument("triangles_two_apexes: order > 64");
  int a = 3 * t, b = 3 * t + 1;
  std::vector<EdgePair> es;
  for (int j = 0; j < t; ++j) {
    es.push_back({3 * j, 3 * j + 1});
    es.push_back({3 * j + 1, 3 * j + 2});
    es.push_back({3 * j, 3 * j + 2});
    es.push_back({a, 3 * j});
    if (j >= 1) es.push_back({b, 3 * j + 1});
  }
  es.push_back({b, 0});
  return Graph::from_edges(order, es);
}

// One 2-edge path (0,1,2) plus (n-3)/2 disjoint single edges; n odd >= 5.
inline Graph path_union(int n) {
  if (n < 5 || n % 2 == 0)
    throw std::invalid_argument("path_union: need odd n >= 5");
  if (n > kMaxOrder) throw std::invalid_argument("path_union: n > 64");
  std::vector<EdgePair> es = {{0, 1}, {1, 2}};
  for (int v = 3; v + 1 < n; v += 2) es.push_back({v, v + 1});
  return Graph::from_edges(n, es);
}

inline Family family_F(int m) {
  if (m < 4) throw std::invalid_argument("family_F: m < 4");
  Family fam;
  fam.name = "F" + std::to_string(m);
  FamilyMember b;
  b.graph = dumbbell(m);
  b.shape = FamilyMember::Shape::Dumbbell;
  b.m = m;
  FamilyMember v;
  v.graph = v_graph(m);
  v.shape = FamilyMember::Shape::VPair;
  v.m = m;
  FamilyMember l;
  l.graph = lambda_graph(m);
  l.shape = FamilyMember::Shape::LambdaR;
  l.m = m;
  l.r = 2;
  fam.members = {b, v, l};
  return fam;
}

inline Family family_F_r(int m, int r, bool permissive = false) {
  if (r < 2) throw std::invalid_argument("family_F_r: r < 2");
  int floor_m = permissive ? r + 2 : 2 * r * r + 2 * r;
  if (m < floor_m) throw std::invalid_argument("family_F_r: m below range");
  Family fam;
  fam.name = "F" + std::to_string(m) + "_" + std::to_string(r);
  FamilyMember b;
  b.graph = dumbbell(m);
  b.shape = FamilyMember::Shape::Dumbbell;
  b.m = m;
  FamilyMember v;
  v.graph = v_graph_r(m, r, permissive);
  v.shape = FamilyMember::Shape::VOverlapR;
  v.m = m;
  v.r = r;
  FamilyMember l;
  l.graph = lambda_graph_r(m, r, permissive);
  l.shape = FamilyMember::Shape::LambdaR;
  l.m = m;
  l.r = r;
  fam.members = {b, v, l};
  return fam;
}

// Name-keyed dispatcher used by the CLI and the golden corpus.
struct ConstructionSpec {
  std::string name;
  std::vector<int> params;
};

inline Graph build_construction(const ConstructionSpec& spec) {
  const auto& p = spec.params;
  auto want = [&](std::size_t k) {
    if (p.size() != k)
      throw std::invalid_argument("construct " + spec.name + ": expected " +
                                  std::to_string(k) + " parameter(s)");
  };
  if (spec.name == "ehm") {
    want(2);
    return ehm_extremal(p[0], p[1]);
  }
  if (spec.name == "near-extremal") {
    want(2);
    return remark_near_extremal(p[0], p[1]);
  }
  if (spec.name == "dumbbell") {
    want(1);
    return dumbbell(p[0]);
  }
  if (spec.name == "v-graph") {
    want(1);
    return v_graph(p[0]);
  }
  if (spec.name == "lambda-graph") {
    want(1);
    return lambda_graph(p[0]);
  }
  if (spec.name == "v-graph-r") {
    want(2);
    return v_graph_r(p[0], p[1], true);
  }
  if (spec.name == "lambda-graph-r") {
    want(2);
    return lambda_graph_r(p[0], p[1], true);
  }
  if (spec.name == "overlap-cliques") {
    want(2);
    return overlap_cliques(p[0], p[1]);
  }
  if (spec.name == "clique-union") {
    want(2);
    return clique_union(p[0], p[1]);
  }
  if (spec.name == "triangles-apex") {
    want(1);
    return triangles_with_apex(p[0]);
  }
  if (spec.name == "triangles-two-apexes") {
    want(1);
    return triangles_two_apexes(p[0]);
  }
  if (spec.name == "path-union") {
    want(1);
    return path_union(p[0]);
  }
  if (spec.name == "complete") {
    want(1);
    return Graph::complete(p[0]);
  }
  if (spec.name == "empty") {
    want(1);
    return Graph::empty(p[0]);
  }
  throw std::invalid_argument("construct: unknown name " + spec.name);
}

// Every named construction instance with order <= 24, in a stable order;
// the golden graph6 corpus is generated from this list.
inline std::vector<ConstructionSpec> golden_construction_list() {
  std::vector<ConstructionSpec> out;
  for (int s = 2; s <= 8; ++s)
    for (int n = s; n <= 24; ++n) out.push_back({"ehm", {n, s}});
  for (int s = 3; s <= 8; ++s)
    for (int n = s; n <= 24; ++n) out.push_back({"near-extremal", {n, s}});
  for (int m = 2; m <= 12; ++m) out.push_back({"dumbbell", {m}});
  for (int m = 4; m <= 12; ++m) out.push_back({"v-graph", {m}});
  for (int m = 4; m <= 12; ++m) out.push_back({"lambda-graph", {m}});
  for (int r = 2; r <= 4; ++r)
    for (int m = r + 2; 2 * m - r <= 24; ++m)
      out.push_back({"v-graph-r", {m, r}});
  for (int r = 2; r <= 4; ++r)
    for (int m = r + 2; m <= 12; ++m)
      out.push_back({"lambda-graph-r", {m, r}});
  for (int r = 2; r <= 8; ++r)
    for (int j = 1; j < r; ++j) out.push_back({"overlap-cliques", {r, j}});
  for (int m = 2; m <= 8; ++m)
    for (int n = m; n <= 24; n += m) out.push_back({"clique-union", {n, m}});
  for (int t = 2; 3 * t + 1 <= 24; ++t)
    out.push_back({"triangles-apex", {t}});
  for (int t = 2; 3 * t + 2 <= 24; ++t)
    out.push_back({"triangles-two-apexes", {t}});
  for (int n = 5; n <= 23; n += 2) out.push_back({"path-union", {n}});
  return out;
}

}  // namespace satlab
