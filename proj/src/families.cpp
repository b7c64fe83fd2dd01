#include "sigmalab/families.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>
#include <tuple>

#include "sigmalab/errors.hpp"

namespace sigmalab {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 11> kFamilyNames{{
    {Family::path, "path"},
    {Family::star, "star"},
    {Family::double_star, "double_star"},
    {Family::caterpillar_uniform, "caterpillar_uniform"},
    {Family::caterpillar_spine, "caterpillar_spine"},
    {Family::greedy_paper, "greedy_paper"},
    {Family::greedy_bfs, "greedy_bfs"},
    {Family::three_level, "three_level"},
    {Family::squared_level, "squared_level"},
    {Family::power_level, "power_level"},
    {Family::k_level, "k_level"},
}};

const std::set<std::string, std::less<>> kListKeys{"d", "ds"};

std::int64_t parse_int(std::string_view token, std::string_view key) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw InputError("family spec: bad integer '" + std::string(token) + "' for key " + std::string(key));
  }
  return value;
}

std::size_t as_size(std::int64_t v, const char* what) {
  if (v < 0) throw InputError(std::string(what) + " must be non-negative");
  return static_cast<std::size_t>(v);
}

std::vector<std::uint32_t> as_u32_list(const std::vector<std::int64_t>& values, const char* what) {
  std::vector<std::uint32_t> out;
  out.reserve(values.size());
  for (std::int64_t v : values) {
    if (v < 0 || v > 0xFFFFFFFFll) throw InputError(std::string(what) + " entries must be non-negative");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw InputError(message);
}

// Saturating helpers for the vertex-count pre-check.
std::optional<std::uint64_t> mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > (std::uint64_t{1} << 63) / a) return std::nullopt;
  return a * b;
}

class TreeBuilder {
 public:
  explicit TreeBuilder(std::size_t expected) { edges_.reserve(expected ? expected - 1 : 0); }

  Vertex add_vertex() { return next_++; }
  Vertex add_child(Vertex parent) {
    const Vertex c = add_vertex();
    edges_.push_back({parent, c});
    return c;
  }
  void connect(Vertex a, Vertex b) { edges_.push_back({a, b}); }
  Tree finish() && { return Tree(next_, std::move(edges_)); }

 private:
  Vertex next_ = 0;
  std::vector<Edge> edges_;
};

// Every constructor re-checks actual degrees against the family's intended
// degrees; a mismatch is a bug in the constructor, not a caller error.
void audit_degrees(const Tree& tree, std::span<const std::uint32_t> expected, std::string_view family) {
  if (expected.size() != tree.vertex_count()) {
    throw std::logic_error(std::string(family) + ": vertex count audit failed");
  }
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    if (tree.degree(v) != expected[v]) {
      throw std::logic_error(std::string(family) + ": degree audit failed at vertex " + std::to_string(v));
    }
  }
}

}  // namespace

std::string_view family_name(Family family) {
  for (const auto& [f, name] : kFamilyNames)
    if (f == family) return name;
  return "unknown";
}

Family family_from_name(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames)
    if (n == name) return f;
  throw InputError("unknown family '" + std::string(name) + "'");
}

std::int64_t FamilySpec::scalar(const std::string& key) const {
  const auto it = scalars.find(key);
  if (it == scalars.end()) {
    throw InputError("family " + std::string(family_name(family)) + " requires parameter " + key);
  }
  return it->second;
}

const std::vector<std::int64_t>& FamilySpec::list(const std::string& key) const {
  const auto it = lists.find(key);
  if (it == lists.end()) {
    throw InputError("family " + std::string(family_name(family)) + " requires list parameter " + key);
  }
  return it->second;
}

FamilySpec parse_family_spec(std::string_view text) {
  FamilySpec spec;
  bool have_family = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;

    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw InputError("family spec: expected key=value, got '" + std::string(item) + "'");
    }
    const std::string key(item.substr(0, eq));
    const std::string_view value = item.substr(eq + 1);

    if (key == "family") {
      spec.family = family_from_name(value);
      have_family = true;
    } else if (kListKeys.contains(key) || value.find(',') != std::string_view::npos) {
      std::vector<std::int64_t> values;
      std::size_t vpos = 0;
      while (vpos <= value.size()) {
        std::size_t vend = value.find(',', vpos);
        if (vend == std::string_view::npos) vend = value.size();
        values.push_back(parse_int(value.substr(vpos, vend - vpos), key));
        vpos = vend + 1;
      }
      spec.lists[key] = std::move(values);
    } else {
      spec.scalars[key] = parse_int(value, key);
    }
  }
  if (!have_family) throw InputError("family spec: missing family=<name>");
  return spec;
}

std::string format_family_spec(const FamilySpec& spec) {
  std::map<std::string, std::string> items;
  for (const auto& [k, v] : spec.scalars) items[k] = std::to_string(v);
  for (const auto& [k, values] : spec.lists) {
    std::string joined;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) joined += ',';
      joined += std::to_string(values[i]);
    }
    items[k] = joined;
  }
  std::string out = "family=" + std::string(family_name(spec.family));
  for (const auto& [k, v] : items) out += ";" + k + "=" + v;
  return out;
}

Tree build_family(const FamilySpec& spec, std::size_t vertex_cap) {
  const auto sz = [&](const char* key) { return as_size(spec.scalar(key), key); };
  switch (spec.family) {
    case Family::path:
      return path(sz("n"));
    case Family::star:
      return star(sz("n"));
    case Family::double_star:
      return double_star(sz("r"), sz("k"));
    case Family::caterpillar_uniform:
      return caterpillar_uniform(sz("n"), sz("p"));
    case Family::caterpillar_spine:
      return caterpillar_spine(as_u32_list(spec.list("d"), "d"));
    case Family::greedy_paper:
    case Family::greedy_bfs: {
      DegreeSequence ds(as_u32_list(spec.list("ds"), "ds"));
      return greedy_tree(ds, spec.family == Family::greedy_paper ? GreedyVariant::paper : GreedyVariant::bfs);
    }
    case Family::three_level:
      return three_level_tree(sz("n"), sz("p"), sz("r"), sz("s"), vertex_cap);
    case Family::squared_level:
      return squared_level_tree(sz("n"), sz("p"), sz("r"), sz("s"), vertex_cap);
    case Family::power_level:
      return power_level_tree(sz("n"), sz("p"), vertex_cap);
    case Family::k_level:
      return k_level_tree(sz("n"), sz("p"), as_u32_list(spec.list("d"), "d"), vertex_cap);
  }
  throw InputError("unhandled family");
}

Tree path(std::size_t n) {
  require(n >= 1, "path: n must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return Tree(n, std::move(edges));
}

Tree star(std::size_t n) {
  require(n >= 2, "star: n must be >= 2");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  return Tree(n, std::move(edges));
}

Tree double_star(std::size_t r, std::size_t k) {
  require(r >= 1 && k >= 1, "double_star: r and k must be >= 1");
  TreeBuilder b(r + k);
  const Vertex u = b.add_vertex();
  const Vertex v = b.add_vertex();
  b.connect(u, v);
  for (std::size_t i = 1; i < k; ++i) b.add_child(u);
  for (std::size_t i = 1; i < r; ++i) b.add_child(v);
  Tree t = std::move(b).finish();

  std::vector<std::uint32_t> expected(r + k, 1);
  expected[0] = static_cast<std::uint32_t>(k);
  expected[1] = static_cast<std::uint32_t>(r);
  audit_degrees(t, expected, "double_star");
  return t;
}

Tree caterpillar_uniform(std::size_t n, std::size_t p) {
  require(n >= 1, "caterpillar_uniform: n must be >= 1");
  if (n == 1) {
    return p == 0 ? path(1) : star(p + 1);
  }
  std::vector<std::uint32_t> spine(n, static_cast<std::uint32_t>(p + 2));
  spine.front() = spine.back() = static_cast<std::uint32_t>(p + 1);
  return caterpillar_spine(spine);
}

Tree caterpillar_spine(std::span<const std::uint32_t> spine_degrees) {
  const std::size_t len = spine_degrees.size();
  if (len < 2) throw InfeasibleSpec("caterpillar_spine: spine length must be >= 2");
  std::size_t total = len;
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint32_t adjacency = (i == 0 || i + 1 == len) ? 1 : 2;
    if (spine_degrees[i] < adjacency) {
      throw InfeasibleSpec("caterpillar_spine: degree " + std::to_string(spine_degrees[i]) + " at position " +
                           std::to_string(i) + " is below its spine adjacency " + std::to_string(adjacency));
    }
    total += spine_degrees[i] - adjacency;
  }

  TreeBuilder b(total);
  for (std::size_t i = 0; i < len; ++i) b.add_vertex();
  for (std::size_t i = 1; i < len; ++i) b.connect(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint32_t adjacency = (i == 0 || i + 1 == len) ? 1 : 2;
    for (std::uint32_t j = adjacency; j < spine_degrees[i]; ++j) b.add_child(static_cast<Vertex>(i));
  }
  Tree t = std::move(b).finish();

  std::vector<std::uint32_t> expected(total, 1);
  std::copy(spine_degrees.begin(), spine_degrees.end(), expected.begin());
  audit_degrees(t, expected, "caterpillar_spine");
  return t;
}

Tree greedy_tree(const DegreeSequence& ds, GreedyVariant variant) {
  const std::size_t n = ds.size();
  if (n == 1) return path(1);
  const auto target = ds.degrees();
  std::vector<std::uint32_t> current(n, 0);
  std::vector<Edge> edges;
  edges.reserve(n - 1);

  if (variant == GreedyVariant::paper) {
    // Open vertices ordered by (current degree asc, target desc, index asc).
    using Key = std::tuple<std::uint32_t, std::int64_t, Vertex>;
    std::set<Key> open;
    auto key = [&](Vertex v) { return Key{current[v], -static_cast<std::int64_t>(target[v]), v}; };
    open.insert(key(0));
    for (Vertex i = 1; i < n; ++i) {
      if (open.empty()) throw InfeasibleSpec("greedy_tree: no vertex with spare capacity");
      const Vertex u = std::get<2>(*open.begin());
      open.erase(open.begin());
      edges.push_back({u, i});
      ++current[u];
      ++current[i];
      if (current[u] < target[u]) open.insert(key(u));
      if (current[i] < target[i]) open.insert(key(i));
    }
  } else {
    // Breadth-first: each vertex, in creation order, is filled with the next
    // (largest remaining) degrees.
    Vertex next = 1;
    for (Vertex v = 0; v < next && next < n; ++v) {
      const std::uint32_t missing = target[v] - (v == 0 ? 0 : 1);
      for (std::uint32_t j = 0; j < missing; ++j) {
        if (next >= n) throw InfeasibleSpec("greedy_tree: degree sequence over-subscribed");
        edges.push_back({v, next++});
      }
    }
    if (next != n) throw InfeasibleSpec("greedy_tree: degree sequence cannot be laid out breadth-first");
  }

  Tree t(n, std::move(edges));
  audit_degrees(t, target, variant == GreedyVariant::paper ? "greedy_paper" : "greedy_bfs");
  return t;
}

std::optional<std::uint64_t> layered_vertex_count(std::size_t n, std::size_t p,
                                                  std::span<const std::uint64_t> children_per_level) {
  std::uint64_t total = n;
  auto level = mul(n, p);
  if (!level) return std::nullopt;
  total += *level;
  for (std::uint64_t c : children_per_level) {
    level = mul(*level, c);
    if (!level || total > (std::uint64_t{1} << 62) || *level > (std::uint64_t{1} << 62)) return std::nullopt;
    total += *level;
  }
  return total;
}

Tree layered_tree(std::size_t n, std::size_t p, std::span<const std::uint64_t> children_per_level,
                  std::size_t vertex_cap) {
  require(n >= 3, "layered tree: spine length n must be >= 3");
  require(p >= 1, "layered tree: p must be >= 1");
  const auto count = layered_vertex_count(n, p, children_per_level);
  if (!count || *count > vertex_cap) {
    throw ResourceError("tree would have " + (count ? std::to_string(*count) : std::string("more than 2^62")) +
                        " vertices, above the cap of " + std::to_string(vertex_cap));
  }

  TreeBuilder b(*count);
  std::vector<std::uint32_t> expected;
  expected.reserve(*count);
  for (std::size_t i = 0; i < n; ++i) {
    b.add_vertex();
    expected.push_back(static_cast<std::uint32_t>((i == 0 || i + 1 == n) ? p + 1 : p + 2));
  }
  for (std::size_t i = 1; i < n; ++i) b.connect(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));

  std::vector<Vertex> level;
  for (Vertex s = 0; s < n; ++s)
    for (std::size_t j = 0; j < p; ++j) level.push_back(b.add_child(s));

  for (std::size_t l = 0; l <= children_per_level.size(); ++l) {
    const std::uint64_t kids = l < children_per_level.size() ? children_per_level[l] : 0;
    std::vector<Vertex> next;
    next.reserve(level.size() * kids);
    for (Vertex v : level) {
      expected.push_back(static_cast<std::uint32_t>(kids + 1));
      for (std::uint64_t j = 0; j < kids; ++j) next.push_back(b.add_child(v));
    }
    level = std::move(next);
  }
  Tree t = std::move(b).finish();
  audit_degrees(t, expected, "layered_tree");
  return t;
}

Tree three_level_tree(std::size_t n, std::size_t p, std::size_t r, std::size_t s, std::size_t vertex_cap) {
  if (r == 0) return layered_tree(n, p, {}, vertex_cap);
  const std::array<std::uint64_t, 2> kids{r, s};
  return layered_tree(n, p, std::span(kids).first(s == 0 ? 1 : 2), vertex_cap);
}

Tree squared_level_tree(std::size_t n, std::size_t p, std::size_t r, std::size_t s, std::size_t vertex_cap) {
  require(r >= 1 && s >= 1, "squared_level: r and s must be >= 1");
  const std::array<std::uint64_t, 2> kids{(1 + r) * (1 + r) - 1, (1 + s) * (1 + s) - 1};
  return layered_tree(n, p, kids, vertex_cap);
}

Tree power_level_tree(std::size_t n, std::size_t p, std::size_t vertex_cap) {
  require(p >= 1, "power_level: p must be >= 1");
  const std::array<std::uint64_t, 2> kids{2 * p - 1, 2 * p * p - 1};
  return layered_tree(n, p, kids, vertex_cap);
}

Tree k_level_tree(std::size_t n, std::size_t p, std::span<const std::uint32_t> level_degrees,
                  std::size_t vertex_cap) {
  require(!level_degrees.empty(), "k_level: need at least one level degree (k >= 2)");
  std::vector<std::uint64_t> kids;
  for (std::uint32_t d : level_degrees) {
    require(d >= 2, "k_level: every level degree must be >= 2");
    kids.push_back(d - 1);
  }
  return layered_tree(n, p, kids, vertex_cap);
}

}  // namespace sigmalab
