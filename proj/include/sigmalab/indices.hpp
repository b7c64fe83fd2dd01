#pragma once

#include <cstddef>

#include "sigmalab/integer.hpp"
#include "sigmalab/tree.hpp"

namespace sigmalab {

// Degree-based indices by direct summation. These are the ground truth every
// closed-form evaluator is arbitrated against.

// Sum over edges of (d(u) - d(v))^2.
IndexValue sigma(const Tree& tree);

// Albertson irregularity: sum over edges of |d(u) - d(v)|.
IndexValue albertson(const Tree& tree);

// First Zagreb index: sum over vertices of d(v)^2.
IndexValue zagreb_m1(const Tree& tree);

// Second Zagreb index: sum over edges of d(u) * d(v).
IndexValue zagreb_m2(const Tree& tree);

// Forgotten index: sum over edges of d(u)^2 + d(v)^2.
IndexValue forgotten_f(const Tree& tree);

struct IndexSet {
  IndexValue sigma;
  IndexValue irr;
  IndexValue m1;
  IndexValue m2;
  IndexValue f;
};

// All five indices in one pass over the edges.
IndexSet all_indices(const Tree& tree);

std::size_t pendant_count(const Tree& tree);

// Predicted change sigma(T') - sigma(T) for the swap uv,xy -> uy,xv, which is
// 2 (d(u) - d(x)) (d(v) - d(y)) since every degree is preserved.
IndexValue sigma_swap_delta(const Tree& tree, Vertex u, Vertex v, Vertex x, Vertex y);

}  // namespace sigmalab
