#include "sigmalab/indices.hpp"

namespace sigmalab {

namespace {

// Per-edge terms are below 2^64 and there are fewer than 2^32 edges, so
// 128-bit accumulators cannot overflow before the final conversion.
using Wide = __int128;

IndexValue widen(Wide x) {
  const bool negative = x < 0;
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-x) : static_cast<unsigned __int128>(x);
  IndexValue out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return negative ? IndexValue(-out) : out;
}

template <class Term>
IndexValue edge_sum(const Tree& tree, Term term) {
  Wide total = 0;
  for (const Edge& e : tree.edges()) {
    total += term(static_cast<Wide>(tree.degree(e.u)), static_cast<Wide>(tree.degree(e.v)));
  }
  return widen(total);
}

}  // namespace

IndexValue sigma(const Tree& tree) {
  return edge_sum(tree, [](Wide a, Wide b) { return (a - b) * (a - b); });
}

IndexValue albertson(const Tree& tree) {
  return edge_sum(tree, [](Wide a, Wide b) { return a > b ? a - b : b - a; });
}

IndexValue zagreb_m1(const Tree& tree) {
  Wide total = 0;
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    const Wide d = static_cast<Wide>(tree.degree(v));
    total += d * d;
  }
  return widen(total);
}

IndexValue zagreb_m2(const Tree& tree) {
  return edge_sum(tree, [](Wide a, Wide b) { return a * b; });
}

IndexValue forgotten_f(const Tree& tree) {
  return edge_sum(tree, [](Wide a, Wide b) { return a * a + b * b; });
}

IndexSet all_indices(const Tree& tree) {
  Wide s = 0, irr = 0, m2 = 0, f = 0;
  for (const Edge& e : tree.edges()) {
    const Wide a = static_cast<Wide>(tree.degree(e.u));
    const Wide b = static_cast<Wide>(tree.degree(e.v));
    s += (a - b) * (a - b);
    irr += a > b ? a - b : b - a;
    m2 += a * b;
    f += a * a + b * b;
  }
  return {widen(s), widen(irr), zagreb_m1(tree), widen(m2), widen(f)};
}

std::size_t pendant_count(const Tree& tree) {
  std::size_t leaves = 0;
  for (Vertex v = 0; v < tree.vertex_count(); ++v) leaves += tree.degree(v) == 1;
  return leaves;
}

IndexValue sigma_swap_delta(const Tree& tree, Vertex u, Vertex v, Vertex x, Vertex y) {
  const auto d = [&](Vertex w) { return static_cast<long long>(degree_of(tree, w)); };
  return 2 * (IndexValue(d(u)) - d(x)) * (IndexValue(d(v)) - d(y));
}

}  // namespace sigmalab
