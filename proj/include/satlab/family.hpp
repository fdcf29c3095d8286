#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "satlab/graph.hpp"

namespace satlab {

// One forbidden graph together with the containment routine suited to its
// shape.  Generic members fall back to subgraph embedding; the clique-plus-
// attachment shapes get clique-enumeration detectors (orders of magnitude
// faster inside saturation loops).
struct FamilyMember {
  enum class Shape {
    Generic,      // arbitrary graph, embedding search
    Clique,       // K_m
    Dumbbell,     // two disjoint K_m plus one connecting edge
    VPair,        // K_m plus two pendant edges at one clique vertex
    LambdaR,      // K_m plus one outside vertex with r edges into it
    VOverlapR,    // K_m and K_{m-r+1} sharing exactly one vertex
  };

  Graph graph;
  Shape shape = Shape::Generic;
  int m = 0;  // clique parameter for specialized shapes
  int r = 0;  // attachment parameter for LambdaR / VOverlapR
};

struct Family {
  std::string name;
  std::vector<FamilyMember> members;

  void validate() const {
    if (members.empty()) throw std::invalid_argument("Family: no members");
    for (const FamilyMember& mem : members)
      if (mem.graph.order() < 2)
        throw std::invalid_argument("Family: member order < 2");
  }
};

inline FamilyMember generic_member(Graph g) {
  FamilyMember m;
  m.graph = g;
  int n = g.order();
  if (n >= 1 && g.edge_count() == n * (n - 1) / 2) {
    m.shape = FamilyMember::Shape::Clique;
    m.m = n;
  }
  return m;
}

// Singleton family, shape-detected (complete members get the clique
// detector automatically).
inline Family family_single(Graph g, std::string name = "") {
  Family fam;
  fam.name = std::move(name);
  fam.members.push_back(generic_member(g));
  fam.validate();
  return fam;
}

inline Family family_clique(int s) {
  if (s < 2) throw std::invalid_argument("family_clique: s < 2");
  FamilyMember m;
  m.graph = Graph::complete(s);
  m.shape = FamilyMember::Shape::Clique;
  m.m = s;
  Family fam;
  fam.name = "K" + std::to_string(s);
  fam.members.push_back(m);
  return fam;
}

}  // namespace satlab
