#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sigmalab/enumeration.hpp"
#include "sigmalab/formulas.hpp"
#include "sigmalab/integer.hpp"

namespace sigmalab {

// Running min/max of sigma with every code attaining each extreme, kept in
// stream order. merge() appends the later part, so merging slices in stream
// order reproduces the sequential result.
struct SigmaExtremes {
  bool empty = true;
  std::uint64_t count = 0;
  IndexValue min;
  IndexValue max;
  std::vector<LevelSequence> argmin;
  std::vector<LevelSequence> argmax;

  void add(const IndexValue& value, const LevelSequence& code);
  void merge(SigmaExtremes&& later);
};

struct ExtremalResult {
  std::size_t n = 0;
  TreeClass cls = TreeClass::all;
  bool empty = true;  // no tree of this class at this n
  std::uint64_t count = 0;
  IndexValue min_value;
  IndexValue max_value;
  std::vector<std::string> min_witnesses;  // compact edge lists
  std::vector<std::string> max_witnesses;
};

ExtremalResult extremal_sigma(std::size_t n, TreeClass cls, std::size_t jobs = 1);

enum class Verdict { confirmed, refuted, inconclusive };
std::string_view verdict_name(Verdict v);

// `expected` is what the claim predicts, `actual` the ground truth measured on
// `tree` (compact edge list). `tree` is empty when the claim is about an
// expression rather than a tree or the tree is too large to embed; `input`
// then carries enough parameters to rebuild it.
struct Witness {
  std::string input;
  std::string expected;
  std::string actual;
  std::string tree;
};

struct ClaimReport {
  std::string claim_id;
  std::string statement;
  Verdict verdict = Verdict::inconclusive;
  std::string scope;
  std::string reason;  // required for inconclusive
  std::vector<Witness> witnesses;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

// Sub-claims greedy_min.paper and greedy_min.bfs over every tree-graphic
// sequence of length 2..n_max. n_max <= 12, else ResourceError.
std::vector<ClaimReport> verify_greedy_min(std::size_t n_max, std::size_t jobs = 1);

// class_minima.strict_caterpillar (mu_c > mu), class_minima.greedy_at_least_min
// (mu_g >= mu) and class_minima.intermediate_exists (some non-caterpillar
// non-greedy T with mu < sigma(T) < mu_c), each over 4 <= n <= n_max.
std::vector<ClaimReport> verify_class_minima(std::size_t n_max, std::size_t jobs = 1);

// gutman.max ((n-1)(n-2)) and gutman.min (0) over 3 <= n <= n_max.
std::vector<ClaimReport> verify_gutman_extremes(std::size_t n_max, std::size_t jobs = 1);

enum class GridPreset { standard, small };
GridPreset grid_from_name(std::string_view name);  // "default" or "small"
std::string_view grid_name(GridPreset grid);

// Parameter points of one formula, in evaluation order.
std::vector<FamilySpec> formula_grid(FormulaId formula, GridPreset grid);
// Points always reported as arbitrations, whatever their verdict.
std::vector<FamilySpec> featured_points(FormulaId formula);
// Formulas covered by the grid sweep, in report order.
std::vector<FormulaId> grid_formulas();

struct FormulaGridResult {
  std::vector<ClaimReport> claims;
  std::vector<Arbitration> arbitrations;  // featured points, then up to 10 mismatches per claim
};

// Arbitrates every point; one claim per formula, or per reading where the
// printed expression is ambiguous. The 4-spine formulas also get an ordering
// claim comparing the printed extreme with a brute force over orderings.
FormulaGridResult verify_formula_grid(FormulaId formula, const std::vector<FamilySpec>& points,
                                      EvalMode mode = EvalMode::exact);

// bound_sun (all trees, 5 <= n <= n_max, 3 <= p <= n-2), bound_sun.equality,
// bound_upper_lambda (all caterpillars, 2 <= n <= n_max).
std::vector<ClaimReport> verify_bounds(std::size_t n_max, std::size_t jobs = 1);

struct Table1Cell {
  std::int64_t p;
  std::int64_t sigma_t;
  std::int64_t sigma_t1;
  std::int64_t difference;
};

// The printed comparison table (n = 10).
const std::vector<Table1Cell>& table1_cells();

// table1.reproduction and table1.negative_entries over p_lo..p_hi (within
// 3..12). Reproduction is confirmed only when, in `mode`, a documented
// interpretation matches every cell of each column; otherwise inconclusive.
std::vector<ClaimReport> reproduce_table1(std::int64_t p_lo, std::int64_t p_hi, EvalMode mode);

}  // namespace sigmalab
