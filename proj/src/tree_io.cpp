#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "sigmalab/errors.hpp"
#include "sigmalab/tree.hpp"

namespace sigmalab {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

// Whole-token unsigned decimal; nullopt on anything else.
std::optional<std::uint64_t> parse_unsigned(std::string_view token) {
  if (token.empty()) return std::nullopt;
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

Tree parse_prufer_line(std::string_view body) {
  std::vector<Vertex> sequence;
  std::size_t pos = 0;
  while (pos < body.size()) {
    if (body[pos] == ' ') {
      ++pos;
      continue;
    }
    std::size_t end = body.find(' ', pos);
    if (end == std::string_view::npos) end = body.size();
    const auto value = parse_unsigned(body.substr(pos, end - pos));
    if (!value || *value > 0xFFFFFFFFull) throw ParseError(1, "malformed Pruefer entry");
    sequence.push_back(static_cast<Vertex>(*value));
    pos = end;
  }
  const std::size_t n = sequence.size() + 2;
  for (Vertex a : sequence) {
    if (a >= n) throw ParseError(1, "Pruefer entry " + std::to_string(a) + " out of range");
  }
  return prufer_decode(sequence, n);
}

}  // namespace

Tree parse_tree(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header");

  constexpr std::string_view prufer_tag = "prufer:";
  if (lines[0].substr(0, prufer_tag.size()) == prufer_tag) {
    if (lines.size() > 1) throw ParseError(2, "unexpected content after Pruefer line");
    return parse_prufer_line(lines[0].substr(prufer_tag.size()));
  }

  const auto header = parse_unsigned(lines[0]);
  if (!header || *header == 0 || *header > 0xFFFFFFFFull) throw ParseError(1, "malformed header");
  const std::size_t n = static_cast<std::size_t>(*header);
  const std::size_t edge_lines = lines.size() - 1;
  if (edge_lines != n - 1) {
    const std::size_t line = edge_lines > n - 1 ? n + 1 : edge_lines + 2;
    throw ParseError(line, "wrong edge count / disconnected: expected " + std::to_string(n - 1) +
                               " edges, got " + std::to_string(edge_lines));
  }

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::vector<std::uint32_t> root(n);
  std::iota(root.begin(), root.end(), 0u);
  auto find = [&](std::uint32_t a) {
    while (root[a] != a) a = root[a] = root[root[a]];
    return a;
  };

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const std::string_view line = lines[i];
    const std::size_t space = line.find(' ');
    if (space == std::string_view::npos) throw ParseError(line_no, "expected \"u v\"");
    const auto a = parse_unsigned(line.substr(0, space));
    const auto b = parse_unsigned(line.substr(space + 1));
    if (!a || !b) throw ParseError(line_no, "expected \"u v\"");
    if (*a >= n || *b >= n) throw ParseError(line_no, "vertex id out of range");
    if (*a == *b) throw ParseError(line_no, "self-loop");
    const auto ra = find(static_cast<std::uint32_t>(*a));
    const auto rb = find(static_cast<std::uint32_t>(*b));
    if (ra == rb) throw ParseError(line_no, "edge closes a cycle (duplicate edge or disconnected input)");
    root[ra] = rb;
    edges.push_back({static_cast<Vertex>(*a), static_cast<Vertex>(*b)});
  }
  return Tree(n, std::move(edges));
}

std::string serialize_tree(const Tree& tree) {
  std::string out = std::to_string(tree.vertex_count()) + "\n";
  for (const Edge& e : tree.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

std::string serialize_tree_compact(const Tree& tree) {
  std::string out = std::to_string(tree.vertex_count());
  for (const Edge& e : tree.edges()) {
    out += ';';
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
  }
  return out;
}

Tree parse_tree_compact(std::string_view text) {
  std::string lines(text);
  std::replace(lines.begin(), lines.end(), ';', '\n');
  return parse_tree(lines);
}

std::string to_dot(const Tree& tree) {
  std::string out = "graph {";
  if (tree.edge_count() == 0) {
    out += " 0;";
  }
  for (const Edge& e : tree.edges()) {
    out += ' ';
    out += std::to_string(e.u);
    out += " -- ";
    out += std::to_string(e.v);
    out += ';';
  }
  out += " }\n";
  return out;
}

}  // namespace sigmalab
