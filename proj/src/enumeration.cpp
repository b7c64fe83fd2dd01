#include "sigmalab/enumeration.hpp"

#include <set>
#include <string>

#include "sigmalab/errors.hpp"

namespace sigmalab {

namespace {

void graphic_sequences(std::size_t slots, std::uint32_t max_entry, std::uint32_t remaining, LevelSequence& prefix,
                       std::vector<DegreeSequence>& out) {
  if (slots == 0) {
    if (remaining == 0) out.emplace_back(prefix);
    return;
  }
  // Every later slot needs at least 1.
  if (remaining < slots || remaining > slots * max_entry) return;
  const std::uint32_t top = std::min<std::uint32_t>(max_entry, remaining - static_cast<std::uint32_t>(slots - 1));
  for (std::uint32_t d = top; d >= 1; --d) {
    prefix.push_back(d);
    graphic_sequences(slots - 1, d, remaining - d, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

RootedLevelSequences::RootedLevelSequences(std::size_t n) {
  if (n == 0) throw InputError("tree order must be positive");
  levels_.resize(n);
  for (std::size_t i = 0; i < n; ++i) levels_[i] = static_cast<std::uint32_t>(i);
}

bool RootedLevelSequences::advance() {
  const std::size_t n = levels_.size();
  std::size_t p = n;
  for (std::size_t i = n; i-- > 0;) {
    if (levels_[i] > 1) {
      p = i;
      break;
    }
  }
  if (p == n) return false;
  std::size_t q = p;
  while (levels_[q] != levels_[p] - 1) --q;
  const std::size_t shift = p - q;
  for (std::size_t i = p; i < n; ++i) levels_[i] = levels_[i - shift];
  return true;
}

void check_enumeration_order(std::size_t n, std::size_t cap) {
  if (n == 0) throw InputError("tree order must be positive");
  if (n > cap) {
    throw ResourceError("n = " + std::to_string(n) + " exceeds the enumeration cap of " + std::to_string(cap));
  }
}

bool is_free_canonical(const LevelSequence& levels) {
  return canonical_form(tree_from_level_sequence(levels)).code == levels;
}

void for_each_free_tree(std::size_t n, const std::function<void(const Tree&, const LevelSequence&)>& visit,
                        std::size_t cap) {
  check_enumeration_order(n, cap);
  RootedLevelSequences gen(n);
  do {
    const LevelSequence& levels = gen.current();
    Tree tree = tree_from_level_sequence(levels);
    if (canonical_form(tree).code == levels) visit(tree, levels);
  } while (gen.advance());
}

std::vector<Tree> free_trees(std::size_t n, std::size_t cap) {
  std::vector<Tree> out;
  for_each_free_tree(n, [&](const Tree& t, const LevelSequence&) { out.push_back(t); }, cap);
  return out;
}

std::vector<LevelSequence> free_tree_codes(std::size_t n, std::size_t cap) {
  std::vector<LevelSequence> out;
  for_each_free_tree(n, [&](const Tree&, const LevelSequence& code) { out.push_back(code); }, cap);
  return out;
}

void labeled_trees_prufer(std::size_t n, const std::function<void(const Tree&)>& visit) {
  if (n < 2) throw InputError("labeled tree oracle needs n >= 2");
  if (n > kPruferCap) {
    throw ResourceError("n = " + std::to_string(n) + " exceeds the Pruefer oracle cap of " +
                        std::to_string(kPruferCap));
  }
  std::vector<Vertex> sequence(n - 2, 0);
  while (true) {
    visit(prufer_decode(sequence, n));
    std::size_t i = sequence.size();
    while (i > 0 && sequence[i - 1] + 1 == n) sequence[--i] = 0;
    if (i == 0) return;
    ++sequence[i - 1];
  }
}

std::size_t prufer_class_count(std::size_t n) {
  std::set<LevelSequence> classes;
  labeled_trees_prufer(n, [&](const Tree& t) { classes.insert(canonical_form(t).code); });
  return classes.size();
}

std::vector<DegreeSequence> tree_graphic_sequences(std::size_t n) {
  if (n < 2) throw InputError("degree sequences need n >= 2");
  std::vector<DegreeSequence> out;
  LevelSequence prefix;
  const auto total = static_cast<std::uint32_t>(2 * (n - 1));
  graphic_sequences(n, total, total, prefix, out);
  return out;
}

std::vector<Tree> trees_with_degree_sequence(const DegreeSequence& ds) {
  if (ds.size() > kDegreeSequenceCap) {
    throw ResourceError("degree sequence length " + std::to_string(ds.size()) + " exceeds the cap of " +
                        std::to_string(kDegreeSequenceCap));
  }
  std::vector<Tree> out;
  for_each_free_tree(ds.size(), [&](const Tree& t, const LevelSequence&) {
    if (degree_sequence(t) == ds) out.push_back(t);
  });
  return out;
}

std::string_view class_name(TreeClass cls) {
  switch (cls) {
    case TreeClass::all: return "all";
    case TreeClass::caterpillar: return "caterpillar";
    case TreeClass::greedy_realizable: return "greedy_realizable";
    case TreeClass::non_caterpillar_non_greedy: return "non_caterpillar_non_greedy";
  }
  return "unknown";
}

TreeClass class_from_name(std::string_view name) {
  for (TreeClass c : {TreeClass::all, TreeClass::caterpillar, TreeClass::greedy_realizable,
                      TreeClass::non_caterpillar_non_greedy}) {
    if (class_name(c) == name) return c;
  }
  throw InputError("unknown tree class '" + std::string(name) + "'");
}

bool is_greedy_realizable(const Tree& tree, GreedyVariant variant) {
  return are_isomorphic(tree, greedy_tree(degree_sequence(tree), variant));
}

bool is_greedy_realizable(const Tree& tree) {
  return is_greedy_realizable(tree, GreedyVariant::paper) || is_greedy_realizable(tree, GreedyVariant::bfs);
}

bool in_class(const Tree& tree, TreeClass cls) {
  switch (cls) {
    case TreeClass::all: return true;
    case TreeClass::caterpillar: return is_caterpillar(tree);
    case TreeClass::greedy_realizable: return is_greedy_realizable(tree);
    case TreeClass::non_caterpillar_non_greedy: return !is_caterpillar(tree) && !is_greedy_realizable(tree);
  }
  return false;
}

std::uint64_t count_by_class(std::size_t n, TreeClass cls, std::size_t jobs) {
  return reduce_free_trees<std::uint64_t>(
      n, jobs, [cls](std::uint64_t& acc, const Tree& t, const LevelSequence&) { acc += in_class(t, cls) ? 1 : 0; },
      [](std::uint64_t& total, std::uint64_t&& part) { total += part; });
}

}  // namespace sigmalab
