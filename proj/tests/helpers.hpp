#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "sigmalab/tree.hpp"

namespace sigmalab::test {

inline Tree relabel(const Tree& t, std::mt19937& rng) {
  std::vector<Vertex> perm(t.vertex_count());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const Edge& e : t.edges()) {
    if (rng() & 1) {
      edges.push_back({perm[e.v], perm[e.u]});
    } else {
      edges.push_back({perm[e.u], perm[e.v]});
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Tree(t.vertex_count(), std::move(edges));
}

inline Tree tree_of(std::size_t n, std::vector<Edge> edges) { return Tree(n, std::move(edges)); }

// Legs of the given lengths hanging from vertex 0.
inline Tree spider(const std::vector<std::size_t>& legs) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t len : legs) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
  }
  return Tree(next, std::move(edges));
}

}  // namespace sigmalab::test
