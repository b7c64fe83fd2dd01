#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sigmalab/tree.hpp"

namespace sigmalab {

inline constexpr std::size_t kDefaultVertexCap = 10'000'000;

enum class GreedyVariant { paper, bfs };

enum class Family {
  path,
  star,
  double_star,
  caterpillar_uniform,
  caterpillar_spine,
  greedy_paper,
  greedy_bfs,
  three_level,
  squared_level,
  power_level,
  k_level,
};

std::string_view family_name(Family family);
Family family_from_name(std::string_view name);  // throws InputError

// A named family instance. Scalars are n, p, r, s, k, ...; lists are the
// comma-separated parameters (`d` for spine or level degrees, `ds` for a
// degree sequence).
struct FamilySpec {
  Family family = Family::path;
  std::map<std::string, std::int64_t> scalars;
  std::map<std::string, std::vector<std::int64_t>> lists;

  std::int64_t scalar(const std::string& key) const;                // throws InputError if absent
  const std::vector<std::int64_t>& list(const std::string& key) const;  // throws InputError if absent
};

// "family=<name>;key=value;key=a,b,c". Throws InputError on bad grammar.
FamilySpec parse_family_spec(std::string_view text);
// Canonical spelling: family first, then keys in sorted order.
std::string format_family_spec(const FamilySpec& spec);

// Dispatches to the constructor for spec.family. Constructors throw
// InputError for out-of-range parameters, InfeasibleSpec for unrealizable
// ones and ResourceError when the vertex count would exceed `vertex_cap`.
Tree build_family(const FamilySpec& spec, std::size_t vertex_cap = kDefaultVertexCap);

Tree path(std::size_t n);
Tree star(std::size_t n);

// Adjacent centres u (degree k, vertex 0) and v (degree r, vertex 1).
Tree double_star(std::size_t r, std::size_t k);

// Spine of n vertices, each carrying p pendant leaves.
Tree caterpillar_uniform(std::size_t n, std::size_t p);

// Spine in the given order; position i ends up with degree spine_degrees[i].
Tree caterpillar_spine(std::span<const std::uint32_t> spine_degrees);

Tree greedy_tree(const DegreeSequence& ds, GreedyVariant variant);

// Spine v1..vn (ends p+1, internal p+2), p level-1 children per spine vertex,
// then `children_per_level[l]` children for every vertex of level l+1. The
// deepest level consists of leaves. Vertex order: spine, then level by level.
Tree layered_tree(std::size_t n, std::size_t p, std::span<const std::uint64_t> children_per_level,
                  std::size_t vertex_cap = kDefaultVertexCap);

// Level-1 degree 1+r, level-2 degree 1+s, leaves below. r = 0 or s = 0
// truncate the lower levels.
Tree three_level_tree(std::size_t n, std::size_t p, std::size_t r, std::size_t s,
                      std::size_t vertex_cap = kDefaultVertexCap);

// Level-1 degree (1+r)^2, level-2 degree (1+s)^2.
Tree squared_level_tree(std::size_t n, std::size_t p, std::size_t r, std::size_t s,
                        std::size_t vertex_cap = kDefaultVertexCap);

// Level-1 degree 2p, level-2 degree 2p^2.
Tree power_level_tree(std::size_t n, std::size_t p, std::size_t vertex_cap = kDefaultVertexCap);

// Level l vertices have degree level_degrees[l-1] (>= 2) for l = 1..k-1;
// level k is leaves.
Tree k_level_tree(std::size_t n, std::size_t p, std::span<const std::uint32_t> level_degrees,
                  std::size_t vertex_cap = kDefaultVertexCap);

// Vertex count of layered_tree without building it, or nullopt past 2^63.
std::optional<std::uint64_t> layered_vertex_count(std::size_t n, std::size_t p,
                                                  std::span<const std::uint64_t> children_per_level);

}  // namespace sigmalab
