#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sigmalab {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// An undirected tree on the dense vertex set {0, ..., n-1}.
//
// Construction validates everything: exactly n-1 edges, ids in range, no
// self-loops or repeated edges, and connectivity. A Tree value is therefore
// always a tree; every other operation relies on that.
class Tree {
 public:
  // Throws InputError describing the first violated invariant.
  Tree(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  // Unchecked; `v` must be < vertex_count().
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(Vertex a, Vertex b) const noexcept;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> offsets_;
  std::vector<Vertex> adjacency_;
};

// Non-increasing degree list that some tree realizes: entries >= 1 summing to
// 2(n-1), or the single-vertex sequence [0].
class DegreeSequence {
 public:
  // Sorts into non-increasing order, then validates. Throws InfeasibleSpec.
  explicit DegreeSequence(std::vector<std::uint32_t> degrees);

  static bool is_tree_graphic(std::span<const std::uint32_t> degrees);

  std::span<const std::uint32_t> degrees() const noexcept { return degrees_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  std::uint32_t operator[](std::size_t i) const { return degrees_[i]; }

  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<std::uint32_t> degrees_;
};

// Level sequence of the tree rooted at its center with subtrees in descending
// lexicographic order; for two centers, the smaller of the two rootings.
// Equal codes <=> isomorphic trees.
struct CanonicalForm {
  std::vector<std::uint32_t> code;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Checked degree lookup; throws InputError for an out-of-range id.
std::size_t degree_of(const Tree& tree, Vertex v);

DegreeSequence degree_sequence(const Tree& tree);

// Deleting all leaves leaves an empty graph, one vertex, or a path.
bool is_caterpillar(const Tree& tree);

// One or two central vertices, ascending.
std::vector<Vertex> centers(const Tree& tree);

// Largest level sequence of `tree` rooted at `root` (children ordered by
// descending lexicographic subtree code). Cost is O(n * height).
std::vector<std::uint32_t> rooted_level_sequence(const Tree& tree, Vertex root);

CanonicalForm canonical_form(const Tree& tree);
bool are_isomorphic(const Tree& a, const Tree& b);

// Inverse of the canonical encoding: builds the rooted tree described by a
// level sequence (vertex i is the i-th entry in preorder). Throws InputError
// if the sequence is not a valid preorder depth listing starting at 0.
Tree tree_from_level_sequence(std::span<const std::uint32_t> levels);

// Standard Pruefer decoding; `sequence` has n-2 entries, each < n.
Tree prufer_decode(std::span<const Vertex> sequence, std::size_t n);
std::vector<Vertex> prufer_encode(const Tree& tree);

// Result of replacing edges uv, xy with uy, xv. Either the rewired tree, or
// a rejection reason ("disconnects") when the rewiring leaves a cycle plus a
// separate component.
struct SwapResult {
  std::optional<Tree> tree;
  std::string rejection;
  explicit operator bool() const noexcept { return tree.has_value(); }
};

// Preconditions: uv, xy are edges, uy, xv are not, and u, v, x, y are
// pairwise distinct; otherwise InputError. Degrees are unchanged by design of
// the move; the result is returned only when it is still connected.
SwapResult degree_preserving_swap(const Tree& tree, Vertex u, Vertex v, Vertex x, Vertex y);

// ---- text formats --------------------------------------------------------

// Edge-list format: "n\nu v\n..." (n-1 edge lines), or "prufer: a1 ... a_{n-2}".
// Throws ParseError naming the offending 1-based line.
Tree parse_tree(std::string_view text);
std::string serialize_tree(const Tree& tree);

// The edge-list format on one line, "n;u v;u v;...".
std::string serialize_tree_compact(const Tree& tree);
Tree parse_tree_compact(std::string_view text);

// "graph { u -- v; ... }"
std::string to_dot(const Tree& tree);

}  // namespace sigmalab
