#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sigmalab/families.hpp"
#include "sigmalab/integer.hpp"
#include "sigmalab/tree.hpp"

namespace sigmalab {

// Closed-form expressions transcribed as printed, including suspected
// misprints. Each evaluator can run in exact arithmetic or with 32-bit
// two's-complement wraparound after every operation.

enum class EvalMode { exact, wrap32 };

std::string_view mode_name(EvalMode mode);
EvalMode mode_from_name(std::string_view name);  // throws InputError

enum class FormulaId {
  albertson_caterpillar,
  albertson_cnm,
  sigma_caterpillar_spine,
  sigma_double_star,
  sigma_cnm,
  sigma_3spine,
  sigma_4spine_min,
  sigma_4spine_max,
  sigma_3level,
  sigma_squared_level,
  sigma_power_level,
  sigma_klevel,
  bound_sun,
  bound_upper_lambda,
  gutman_max,
  gutman_min,
};

std::string_view formula_name(FormulaId id);

// (k-1)^3 + (r-1)^3 + (k-r)^2
IndexValue eval_sigma_double_star(std::int64_t r, std::int64_t k, EvalMode mode = EvalMode::exact);

// 2m^3 for n = 2, else 2m^3 + m*n*(m+1)^2 + 2 (coefficient n as printed).
IndexValue eval_sigma_cnm(std::int64_t n, std::int64_t m, EvalMode mode = EvalMode::exact);
// Not printed: the same expression with n-2 internal spine vertices.
IndexValue eval_sigma_cnm_internal(std::int64_t n, std::int64_t m);
// The worked n = 3 line: 2m^3 + m(m+1)^2 + 2.
IndexValue eval_sigma_cnm_n3_line(std::int64_t m);

// m(m+1)n - 2m + 2 for n >= 3, m(m+1)n - 2m for n in {1, 2}.
IndexValue eval_albertson_cnm(std::int64_t n, std::int64_t m, EvalMode mode = EvalMode::exact);

// Which list the Albertson caterpillar expression's d_1..d_n refers to.
enum class AlbertsonReading { full_sequence, spine_only };

// d1^2 + dn^2 + sum_{2..n-1} d_i^2 + sum_{2..n-1} d_i + dn - d1 - 2n + 2, with
// n = d.size(). For full_sequence, pass the whole degree sequence in
// ascending order.
IndexValue eval_albertson_caterpillar(std::span<const std::int64_t> d, EvalMode mode = EvalMode::exact);

// (dn-1)^3 + (d1-1)^3 + sum_{i=1}^{n-1} (d_i - d_{i+1})^2
//   + sum_{i=2}^{n-1} (d_i - 1)^2 (d_i - 2), d = spine degrees in spine order.
IndexValue eval_sigma_caterpillar_spine(std::span<const std::int64_t> d, EvalMode mode = EvalMode::exact);

// p * sum (x_i - 1)^2 + sum (x_i - x_{i+1})^2 for one spine ordering x.
IndexValue spine_ordering_value(std::int64_t p, std::span<const std::int64_t> ordering);

// sum_{i=1}^{3} p (d_i - 1)^2 + sum_{i=1}^{2} (d_i - d_{i+1})^2
IndexValue eval_sigma_3spine(std::int64_t p, std::span<const std::int64_t> d, EvalMode mode = EvalMode::exact);

enum class SpineExtreme { min, max };

// min: p sum (d_i-1)^2 + (d1-d2)^2 + (d2-d3)^2 + (d3-d4)^2
// max: p sum (d_i-1)^2 + (d4-d1)^2 + (d1-d3)^2 + (d3-d2)^2
IndexValue eval_sigma_4spine(std::int64_t p, std::span<const std::int64_t> d, SpineExtreme which,
                             EvalMode mode = EvalMode::exact);

// The positional spine ordering each printed extreme corresponds to.
std::vector<std::int64_t> printed_4spine_ordering(std::span<const std::int64_t> d, SpineExtreme which);

struct OrderingExtremes {
  IndexValue min;
  IndexValue max;
  std::vector<std::int64_t> argmin;  // first ordering (lexicographic) attaining min
  std::vector<std::int64_t> argmax;
};

// Brute force over every ordering of d as a spine sequence.
OrderingExtremes brute_force_spine_orderings(std::int64_t p, std::span<const std::int64_t> d);

// nprs^3 + p(n-2)(p+1-r)^2 + 2p(p-r)^2 + npr(r-s)^2 + 2
IndexValue eval_sigma_3level(std::int64_t n, std::int64_t p, std::int64_t r, std::int64_t s,
                             EvalMode mode = EvalMode::exact);

// The squared-level display has an unbalanced first term
// "mu0 - (1+s)^2)^2" with mu0 printed as "np((1+r)^2-1)((1+r)^2".
enum class SquaredLevelReading {
  spliced,            // mu0 - ... read as np((1+r)^2-1)((1+r)^2-(1+s)^2)^2
  truncated,          // np((1+r)^2-1)(1+r)^2 - ((1+s)^2)^2
  truncated_shifted,  // np((1+r)^2-1)(1+r)^2 - ((1+s)^2-1)^2
};

std::string_view reading_name(SquaredLevelReading reading);

// First term per `reading`, plus np((1+r)^2-1)((1+s)^2-1)^3 + mu1 + 2 with
// mu1 = 2p(p-(1+r)^2+1)^2 + p(n-2)(p+1-(1+r)^2)^2.
IndexValue eval_sigma_squared_level(std::int64_t n, std::int64_t p, std::int64_t r, std::int64_t s,
                                    EvalMode mode = EvalMode::exact,
                                    SquaredLevelReading reading = SquaredLevelReading::spliced);

// np(2p-1)(2p^2-1)^3 + 2p(1-p)^2 + p(n-2)(2-p)^2 + np(2p-1)(2p-2p^2)^2 + 2
IndexValue eval_sigma_power_level(std::int64_t n, std::int64_t p, EvalMode mode = EvalMode::exact);

// sum_{l=1}^{k-1} np (prod_{j<l} (d_j-1)) (d_l - d_{l+1})^2
//   + np (prod_{j<=k-2} (d_j-1)) (d_{k-1}-1)^2 + mu,
// mu = 2 + 2p(p+1-d_1)^2 + p(n-2)(p+2-d_1)^2, d = d_1..d_{k-1}, d_k = 1.
IndexValue eval_sigma_klevel(std::int64_t n, std::int64_t p, std::span<const std::int64_t> d,
                             EvalMode mode = EvalMode::exact);

// (p-1)^3 + (p-2)^2 + 1
IndexValue sun_bound(std::int64_t pendants);

struct SunBoundCheck {
  bool applicable = false;  // n >= 5 and 3 <= p <= n-2
  bool holds = false;
  std::size_t pendants = 0;
  IndexValue sigma;
  IndexValue bound;
  IndexValue slack;  // bound - sigma
};

SunBoundCheck check_bound_sun(const Tree& tree);

struct LambdaBoundCheck {
  bool holds = false;
  Rational lhs;  // sigma(C)
  Rational rhs;
};

// sigma(C) <= sum_{i=1}^{n-1} lambda (d_i - d_{i+1})^3 + 2(n^2+m^2) + 3m + n + 2
// with d the full degree sequence (non-increasing), n the order, m = n-1,
// lambda = 2(n-1)/n. Throws InputError for a non-caterpillar.
LambdaBoundCheck check_bound_upper_lambda(const Tree& caterpillar);
LambdaBoundCheck check_bound_upper_lambda(std::span<const std::uint32_t> spine_degrees);

struct GutmanExtremes {
  IndexValue max_printed;  // (n-1)(n-2)
  IndexValue min_printed;  // 0
  IndexValue max_star;     // sigma(star(n)) = (n-1)(n-2)^2
};

GutmanExtremes eval_gutman_extremes(std::int64_t n);

// ---- arbitration ---------------------------------------------------------

enum class ArbitrationVerdict { match, mismatch, not_applicable };
std::string_view verdict_name(ArbitrationVerdict v);

// One printed-vs-constructed comparison. The oracle value is always the
// direct index of the constructed tree.
struct Arbitration {
  FormulaId formula;
  FamilySpec params;
  EvalMode mode = EvalMode::exact;
  IndexValue printed_value;
  std::optional<IndexValue> oracle_value;
  ArbitrationVerdict verdict = ArbitrationVerdict::not_applicable;
  std::string witness;  // compact edge list of the constructed tree
  std::string note;
};

// Formula ids with a constructive family and their parameter keys:
//   sigma_double_star      r, k
//   sigma_cnm              n, m
//   albertson_cnm          n, m
//   sigma_caterpillar_spine, albertson_caterpillar   d (spine degrees); the
//                          latter also takes reading=0 (full_sequence) or 1
//   sigma_3spine           p, d (3 entries)
//   sigma_4spine_min/max   p, d (4 entries)
//   sigma_3level, sigma_squared_level   n, p, r, s
//   sigma_power_level      n, p
//   sigma_klevel           n, p, d (level degrees)
// `params.family` is ignored. Throws InputError for other ids.
Arbitration arbitrate(FormulaId formula, const FamilySpec& params, EvalMode mode = EvalMode::exact,
                      std::size_t vertex_cap = kDefaultVertexCap);

}  // namespace sigmalab
