#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <string_view>
#include <thread>
#include <vector>

#include "sigmalab/families.hpp"
#include "sigmalab/tree.hpp"

namespace sigmalab {

inline constexpr std::size_t kFreeTreeCap = 18;
inline constexpr std::size_t kPruferCap = 9;
inline constexpr std::size_t kDegreeSequenceCap = 14;

using LevelSequence = std::vector<std::uint32_t>;

// Every rooted tree on n vertices as its largest level sequence, in
// descending lexicographic order, via the constant-amortized successor rule:
// start at the path 0,1,...,n-1; p = last index with L[p] > 1, q = last index
// before p with L[q] = L[p]-1, then L[i] = L[i-(p-q)] for i >= p; stop at the
// star.
class RootedLevelSequences {
 public:
  explicit RootedLevelSequences(std::size_t n);

  const LevelSequence& current() const noexcept { return levels_; }
  bool advance();

 private:
  LevelSequence levels_;
};

// True when `levels` is the canonical form of the free tree it describes.
bool is_free_canonical(const LevelSequence& levels);

// Throws InputError for n = 0 and ResourceError for n > cap.
void check_enumeration_order(std::size_t n, std::size_t cap = kFreeTreeCap);

// Free trees stream in descending lexicographic order of canonical code.
void for_each_free_tree(std::size_t n, const std::function<void(const Tree&, const LevelSequence&)>& visit,
                        std::size_t cap = kFreeTreeCap);
std::vector<Tree> free_trees(std::size_t n, std::size_t cap = kFreeTreeCap);
std::vector<LevelSequence> free_tree_codes(std::size_t n, std::size_t cap = kFreeTreeCap);

// Decodes every Pruefer sequence; 2 <= n <= 9, else ResourceError.
void labeled_trees_prufer(std::size_t n, const std::function<void(const Tree&)>& visit);
// Number of isomorphism classes among the labeled trees.
std::size_t prufer_class_count(std::size_t n);

// All tree-graphic sequences of length n >= 2, each non-increasing, in
// descending lexicographic order.
std::vector<DegreeSequence> tree_graphic_sequences(std::size_t n);

// Free trees (stream order) realizing ds. Length <= 14, else ResourceError.
std::vector<Tree> trees_with_degree_sequence(const DegreeSequence& ds);

enum class TreeClass { all, caterpillar, greedy_realizable, non_caterpillar_non_greedy };

std::string_view class_name(TreeClass cls);
TreeClass class_from_name(std::string_view name);  // throws InputError

bool is_greedy_realizable(const Tree& tree, GreedyVariant variant);
bool is_greedy_realizable(const Tree& tree);  // either variant
bool in_class(const Tree& tree, TreeClass cls);

std::uint64_t count_by_class(std::size_t n, TreeClass cls, std::size_t jobs = 1);

// Map-reduce over free_trees(n). The raw rooted sequences are produced in
// windows; each window is split into `jobs` contiguous slices that filter and
// visit into their own accumulator, and the slices are merged in stream order.
// With an order-respecting merge the result is independent of `jobs`.
template <class Acc, class Visit, class Merge>
Acc reduce_free_trees(std::size_t n, std::size_t jobs, Visit visit, Merge merge, std::size_t cap = kFreeTreeCap) {
  Acc total{};
  if (jobs <= 1) {
    for_each_free_tree(n, [&](const Tree& t, const LevelSequence& code) { visit(total, t, code); }, cap);
    return total;
  }
  check_enumeration_order(n, cap);

  constexpr std::size_t kSlice = 512;
  RootedLevelSequences gen(n);
  bool more = true;
  std::vector<LevelSequence> window;
  while (more) {
    window.clear();
    while (more && window.size() < jobs * kSlice) {
      window.push_back(gen.current());
      more = gen.advance();
    }
    const std::size_t slices = std::min(jobs, window.size());
    const std::size_t per = (window.size() + slices - 1) / slices;
    std::vector<Acc> parts(slices);
    std::vector<std::exception_ptr> errors(slices);
    std::vector<std::thread> workers;
    for (std::size_t s = 0; s < slices; ++s) {
      workers.emplace_back([&, s] {
        try {
          const std::size_t end = std::min(window.size(), (s + 1) * per);
          for (std::size_t i = s * per; i < end; ++i) {
            if (!is_free_canonical(window[i])) continue;
            visit(parts[s], tree_from_level_sequence(window[i]), window[i]);
          }
        } catch (...) {
          errors[s] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (auto& part : parts) merge(total, std::move(part));
  }
  return total;
}

}  // namespace sigmalab
