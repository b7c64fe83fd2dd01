#include "sigmalab/tree.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <utility>

#include "sigmalab/errors.hpp"

namespace sigmalab {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // False when a and b were already joined.
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

bool same_pair(const Edge& a, const Edge& b) {
  return (a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u);
}

}  // namespace

Tree::Tree(std::size_t vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ == 0) throw InputError("vertex count must be positive");
  if (n_ > std::size_t{0xFFFFFFFFu}) throw InputError("vertex count exceeds 32-bit vertex ids");
  if (edges_.size() != n_ - 1) {
    throw InputError("wrong edge count: expected " + std::to_string(n_ - 1) + ", got " +
                     std::to_string(edges_.size()));
  }

  DisjointSets components(n_);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u >= n_ || e.v >= n_) {
      throw InputError("vertex id out of range in edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (!components.unite(e.u, e.v)) {
      for (std::size_t j = 0; j < i; ++j) {
        if (same_pair(edges_[j], e)) {
          throw InputError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
        }
      }
      // n-1 edges with a cycle cannot span all n vertices.
      throw InputError("disconnected: edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                       " closes a cycle");
    }
  }

  offsets_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(2 * edges_.size());
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
}

bool Tree::has_edge(Vertex a, Vertex b) const noexcept {
  if (a >= n_ || b >= n_) return false;
  if (degree(a) > degree(b)) std::swap(a, b);
  const auto adj = neighbors(a);
  return std::find(adj.begin(), adj.end(), b) != adj.end();
}

DegreeSequence::DegreeSequence(std::vector<std::uint32_t> degrees) : degrees_(std::move(degrees)) {
  std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
  if (!is_tree_graphic(degrees_)) throw InfeasibleSpec("degree sequence is not tree-graphic");
}

bool DegreeSequence::is_tree_graphic(std::span<const std::uint32_t> degrees) {
  if (degrees.empty()) return false;
  if (degrees.size() == 1) return degrees[0] == 0;
  std::uint64_t sum = 0;
  for (std::uint32_t d : degrees) {
    if (d == 0) return false;
    sum += d;
  }
  return sum == 2 * (static_cast<std::uint64_t>(degrees.size()) - 1);
}

std::size_t degree_of(const Tree& tree, Vertex v) {
  if (v >= tree.vertex_count()) {
    throw InputError("vertex " + std::to_string(v) + " out of range for tree of order " +
                     std::to_string(tree.vertex_count()));
  }
  return tree.degree(v);
}

DegreeSequence degree_sequence(const Tree& tree) {
  std::vector<std::uint32_t> degrees(tree.vertex_count());
  for (Vertex v = 0; v < tree.vertex_count(); ++v) degrees[v] = static_cast<std::uint32_t>(tree.degree(v));
  return DegreeSequence(std::move(degrees));
}

bool is_caterpillar(const Tree& tree) {
  // The non-leaf vertices induce a subtree; it is a path iff no vertex has
  // three or more non-leaf neighbours.
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    if (tree.degree(v) < 2) continue;
    int inner = 0;
    for (Vertex w : tree.neighbors(v)) {
      if (tree.degree(w) >= 2 && ++inner > 2) return false;
    }
  }
  return true;
}

std::vector<Vertex> centers(const Tree& tree) {
  const std::size_t n = tree.vertex_count();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0u);
    return all;
  }
  std::vector<std::uint32_t> remaining(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    remaining[v] = static_cast<std::uint32_t>(tree.degree(v));
    if (remaining[v] == 1) layer.push_back(v);
  }
  std::size_t left = n;
  while (left > 2) {
    left -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : tree.neighbors(leaf)) {
        if (--remaining[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::vector<std::uint32_t> rooted_level_sequence(const Tree& tree, Vertex root) {
  const std::size_t n = tree.vertex_count();
  if (root >= n) throw InputError("root out of range");

  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<Vertex> parent(n, root);
  order.push_back(root);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex v = order[head];
    for (Vertex w : tree.neighbors(v)) {
      if (w == parent[v] || w == root) continue;
      parent[w] = v;
      order.push_back(w);
    }
  }

  // codes[v] holds v's subtree sequence relative to v (v itself at level 0).
  std::vector<std::vector<std::uint32_t>> codes(n);
  std::vector<std::vector<Vertex>> children(n);
  for (std::size_t i = 1; i < order.size(); ++i) children[parent[order[i]]].push_back(order[i]);

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    auto& kids = children[v];
    std::sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) { return codes[a] > codes[b]; });
    std::vector<std::uint32_t> code{0};
    for (Vertex c : kids) {
      for (std::uint32_t level : codes[c]) code.push_back(level + 1);
      std::vector<std::uint32_t>().swap(codes[c]);
    }
    codes[v] = std::move(code);
  }
  return std::move(codes[root]);
}

CanonicalForm canonical_form(const Tree& tree) {
  const auto c = centers(tree);
  CanonicalForm form{rooted_level_sequence(tree, c[0])};
  if (c.size() == 2) {
    auto other = rooted_level_sequence(tree, c[1]);
    if (other < form.code) form.code = std::move(other);
  }
  return form;
}

bool are_isomorphic(const Tree& a, const Tree& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

Tree tree_from_level_sequence(std::span<const std::uint32_t> levels) {
  if (levels.empty() || levels[0] != 0) throw InputError("level sequence must start with 0");
  std::vector<Vertex> last_at_level{0};
  std::vector<Edge> edges;
  edges.reserve(levels.size() - 1);
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const std::uint32_t level = levels[i];
    if (level == 0 || level > levels[i - 1] + 1) throw InputError("invalid level sequence");
    edges.push_back({last_at_level[level - 1], static_cast<Vertex>(i)});
    last_at_level.resize(level);
    last_at_level.push_back(static_cast<Vertex>(i));
  }
  return Tree(levels.size(), std::move(edges));
}

Tree prufer_decode(std::span<const Vertex> sequence, std::size_t n) {
  if (n == 0) throw InputError("vertex count must be positive");
  if (n == 1) {
    if (!sequence.empty()) throw InputError("Pruefer sequence for n=1 must be empty");
    return Tree(1, {});
  }
  if (sequence.size() != n - 2) throw InputError("Pruefer sequence must have n-2 entries");

  std::vector<std::uint32_t> degree(n, 1);
  for (Vertex a : sequence) {
    if (a >= n) throw InputError("Pruefer entry out of range");
    ++degree[a];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = static_cast<Vertex>(ptr);
  for (Vertex a : sequence) {
    edges.push_back({leaf, a});
    if (--degree[a] == 1 && a < ptr) {
      leaf = a;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = static_cast<Vertex>(ptr);
    }
  }
  edges.push_back({leaf, static_cast<Vertex>(n - 1)});
  return Tree(n, std::move(edges));
}

std::vector<Vertex> prufer_encode(const Tree& tree) {
  const std::size_t n = tree.vertex_count();
  if (n <= 2) return {};
  std::vector<std::uint32_t> degree(n);
  std::vector<bool> removed(n, false);
  for (Vertex v = 0; v < n; ++v) degree[v] = static_cast<std::uint32_t>(tree.degree(v));
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<Vertex> out;
  out.reserve(n - 2);
  while (out.size() < n - 2) {
    const Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    removed[leaf] = true;
    for (Vertex w : tree.neighbors(leaf)) {
      if (removed[w]) continue;
      out.push_back(w);
      if (--degree[w] == 1) leaves.insert(w);
    }
  }
  return out;
}

SwapResult degree_preserving_swap(const Tree& tree, Vertex u, Vertex v, Vertex x, Vertex y) {
  const std::size_t n = tree.vertex_count();
  for (Vertex id : {u, v, x, y}) {
    if (id >= n) throw InputError("vertex " + std::to_string(id) + " out of range");
  }
  const std::set<Vertex> distinct{u, v, x, y};
  if (distinct.size() != 4) throw InputError("swap vertices must be pairwise distinct");
  if (!tree.has_edge(u, v) || !tree.has_edge(x, y)) throw InputError("uv and xy must be edges");
  if (tree.has_edge(u, y) || tree.has_edge(x, v)) throw InputError("uy and xv must be non-edges");

  std::vector<Edge> edges(tree.edges().begin(), tree.edges().end());
  for (Edge& e : edges) {
    const Edge swapped_out = e;
    if (same_pair(swapped_out, {u, v})) e = {u, y};
    else if (same_pair(swapped_out, {x, y})) e = {x, v};
  }

  DisjointSets components(n);
  for (const Edge& e : edges) {
    if (!components.unite(e.u, e.v)) return {std::nullopt, "disconnects"};
  }
  return {Tree(n, std::move(edges)), {}};
}

}  // namespace sigmalab
