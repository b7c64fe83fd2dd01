#include "sigmalab/formulas.hpp"

#include <algorithm>
#include <array>

#include "sigmalab/errors.hpp"
#include "sigmalab/indices.hpp"

namespace sigmalab {

namespace {

// Witness trees above this size are identified by their parameters only.
constexpr std::size_t kWitnessVertexLimit = 5000;

template <class Eval>
IndexValue dispatch(EvalMode mode, Eval eval) {
  if (mode == EvalMode::exact) return eval.template operator()<IndexValue>();
  return to_exact(eval.template operator()<Wrap32>());
}

void require_size(std::span<const std::int64_t> d, std::size_t size, const char* what) {
  if (d.size() != size) {
    throw InputError(std::string(what) + " expects " + std::to_string(size) + " degrees, got " +
                     std::to_string(d.size()));
  }
}

std::vector<std::int64_t> to_i64(std::span<const std::uint32_t> values) {
  return {values.begin(), values.end()};
}

std::vector<std::uint32_t> to_u32(std::span<const std::int64_t> values) {
  std::vector<std::uint32_t> out;
  for (std::int64_t v : values) {
    if (v < 0 || v > 0xFFFFFFFFll) throw InputError("degree out of range");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

// d[i] == p + (number of spine neighbours of position i).
bool spine_consistent(std::int64_t p, std::span<const std::int64_t> spine) {
  for (std::size_t i = 0; i < spine.size(); ++i) {
    const std::int64_t adjacency = (i == 0 || i + 1 == spine.size()) ? 1 : 2;
    if (spine[i] != p + adjacency) return false;
  }
  return true;
}

}  // namespace

std::string_view mode_name(EvalMode mode) { return mode == EvalMode::exact ? "exact" : "wrap32"; }

EvalMode mode_from_name(std::string_view name) {
  if (name == "exact") return EvalMode::exact;
  if (name == "wrap32") return EvalMode::wrap32;
  throw InputError("unknown mode '" + std::string(name) + "'");
}

std::string_view formula_name(FormulaId id) {
  switch (id) {
    case FormulaId::albertson_caterpillar: return "albertson_caterpillar";
    case FormulaId::albertson_cnm: return "albertson_cnm";
    case FormulaId::sigma_caterpillar_spine: return "sigma_caterpillar_spine";
    case FormulaId::sigma_double_star: return "sigma_double_star";
    case FormulaId::sigma_cnm: return "sigma_cnm";
    case FormulaId::sigma_3spine: return "sigma_3spine";
    case FormulaId::sigma_4spine_min: return "sigma_4spine_min";
    case FormulaId::sigma_4spine_max: return "sigma_4spine_max";
    case FormulaId::sigma_3level: return "sigma_3level";
    case FormulaId::sigma_squared_level: return "sigma_squared_level";
    case FormulaId::sigma_power_level: return "sigma_power_level";
    case FormulaId::sigma_klevel: return "sigma_klevel";
    case FormulaId::bound_sun: return "bound_sun";
    case FormulaId::bound_upper_lambda: return "bound_upper_lambda";
    case FormulaId::gutman_max: return "gutman_max";
    case FormulaId::gutman_min: return "gutman_min";
  }
  return "unknown";
}

std::string_view reading_name(SquaredLevelReading reading) {
  switch (reading) {
    case SquaredLevelReading::spliced: return "spliced";
    case SquaredLevelReading::truncated: return "truncated";
    case SquaredLevelReading::truncated_shifted: return "truncated_shifted";
  }
  return "unknown";
}

std::string_view verdict_name(ArbitrationVerdict v) {
  switch (v) {
    case ArbitrationVerdict::match: return "match";
    case ArbitrationVerdict::mismatch: return "mismatch";
    case ArbitrationVerdict::not_applicable: return "not_applicable";
  }
  return "unknown";
}

IndexValue eval_sigma_double_star(std::int64_t r, std::int64_t k, EvalMode mode) {
  return dispatch(mode, [&]<class S>() {
    const S R(r), K(k), one(1);
    return cube(K - one) + cube(R - one) + square(K - R);
  });
}

IndexValue eval_sigma_cnm(std::int64_t n, std::int64_t m, EvalMode mode) {
  return dispatch(mode, [&]<class S>() {
    const S N(n), M(m);
    const S base = S(2) * cube(M);
    if (n == 2) return base;
    return base + M * N * square(M + S(1)) + S(2);
  });
}

IndexValue eval_sigma_cnm_internal(std::int64_t n, std::int64_t m) {
  const IndexValue M(m);
  if (n == 2) return 2 * M * M * M;
  return 2 * M * M * M + M * (IndexValue(n) - 2) * (M + 1) * (M + 1) + 2;
}

IndexValue eval_sigma_cnm_n3_line(std::int64_t m) {
  const IndexValue M(m);
  return 2 * M * M * M + M * (M + 1) * (M + 1) + 2;
}

IndexValue eval_albertson_cnm(std::int64_t n, std::int64_t m, EvalMode mode) {
  return dispatch(mode, [&]<class S>() {
    const S N(n), M(m);
    const S base = M * (M + S(1)) * N - S(2) * M;
    return n >= 3 ? base + S(2) : base;
  });
}

IndexValue eval_albertson_caterpillar(std::span<const std::int64_t> d, EvalMode mode) {
  if (d.size() < 2) throw InputError("albertson_caterpillar needs at least two degrees");
  return dispatch(mode, [&]<class S>() {
    const std::size_t n = d.size();
    const S first(d.front()), last(d.back());
    S total = square(first) + square(last);
    for (std::size_t i = 1; i + 1 < n; ++i) total += square(S(d[i]));
    for (std::size_t i = 1; i + 1 < n; ++i) total += S(d[i]);
    return total + last - first - S(2) * S(static_cast<std::int64_t>(n)) + S(2);
  });
}

IndexValue eval_sigma_caterpillar_spine(std::span<const std::int64_t> d, EvalMode mode) {
  if (d.size() < 2) throw InputError("sigma_caterpillar_spine needs at least two degrees");
  return dispatch(mode, [&]<class S>() {
    const std::size_t n = d.size();
    const S one(1), two(2);
    S total = cube(S(d.back()) - one) + cube(S(d.front()) - one);
    // The printed upper limit n would reference d_{n+1}; the sum stops at n-1.
    for (std::size_t i = 0; i + 1 < n; ++i) total += square(S(d[i]) - S(d[i + 1]));
    for (std::size_t i = 1; i + 1 < n; ++i) total += square(S(d[i]) - one) * (S(d[i]) - two);
    return total;
  });
}

IndexValue spine_ordering_value(std::int64_t p, std::span<const std::int64_t> x) {
  IndexValue total = 0;
  for (std::int64_t v : x) total += IndexValue(p) * (IndexValue(v) - 1) * (IndexValue(v) - 1);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const IndexValue diff = IndexValue(x[i]) - x[i + 1];
    total += diff * diff;
  }
  return total;
}

IndexValue eval_sigma_3spine(std::int64_t p, std::span<const std::int64_t> d, EvalMode mode) {
  require_size(d, 3, "sigma_3spine");
  return dispatch(mode, [&]<class S>() {
    const S P(p), one(1);
    S total(0);
    for (std::int64_t di : d) total += P * square(S(di) - one);
    return total + square(S(d[0]) - S(d[1])) + square(S(d[1]) - S(d[2]));
  });
}

IndexValue eval_sigma_4spine(std::int64_t p, std::span<const std::int64_t> d, SpineExtreme which, EvalMode mode) {
  require_size(d, 4, "sigma_4spine");
  return dispatch(mode, [&]<class S>() {
    const S P(p), one(1);
    const S d1(d[0]), d2(d[1]), d3(d[2]), d4(d[3]);
    const S pendants = P * (square(d1 - one) + square(d2 - one) + square(d3 - one) + square(d4 - one));
    if (which == SpineExtreme::min) return pendants + square(d1 - d2) + square(d2 - d3) + square(d3 - d4);
    return pendants + square(d4 - d1) + square(d1 - d3) + square(d3 - d2);
  });
}

std::vector<std::int64_t> printed_4spine_ordering(std::span<const std::int64_t> d, SpineExtreme which) {
  require_size(d, 4, "sigma_4spine");
  if (which == SpineExtreme::min) return {d[0], d[1], d[2], d[3]};
  return {d[3], d[0], d[2], d[1]};
}

OrderingExtremes brute_force_spine_orderings(std::int64_t p, std::span<const std::int64_t> d) {
  if (d.empty()) throw InputError("brute_force_spine_orderings needs a non-empty list");
  std::vector<std::int64_t> perm(d.begin(), d.end());
  std::sort(perm.begin(), perm.end());
  OrderingExtremes out{spine_ordering_value(p, perm), spine_ordering_value(p, perm), perm, perm};
  while (std::next_permutation(perm.begin(), perm.end())) {
    const IndexValue v = spine_ordering_value(p, perm);
    if (v < out.min) {
      out.min = v;
      out.argmin = perm;
    }
    if (v > out.max) {
      out.max = v;
      out.argmax = perm;
    }
  }
  return out;
}

IndexValue eval_sigma_3level(std::int64_t n, std::int64_t p, std::int64_t r, std::int64_t s, EvalMode mode) {
  return dispatch(mode, [&]<class S>() {
    const S N(n), P(p), R(r), Sv(s), one(1), two(2);
    return N * P * R * cube(Sv) + P * (N - two) * square(P + one - R) + two * P * square(P - R) +
           N * P * R * square(R - Sv) + two;
  });
}

IndexValue eval_sigma_squared_level(std::int64_t n, std::int64_t p, std::int64_t r, std::int64_t s, EvalMode mode,
                                    SquaredLevelReading reading) {
  return dispatch(mode, [&]<class S>() {
    const S N(n), P(p), one(1), two(2);
    const S R = square(one + S(r));
    const S Sq = square(one + S(s));
    S head(0);
    switch (reading) {
      case SquaredLevelReading::spliced:
        head = N * P * (R - one) * square(R - Sq);
        break;
      case SquaredLevelReading::truncated:
        head = N * P * (R - one) * R - square(Sq);
        break;
      case SquaredLevelReading::truncated_shifted:
        head = N * P * (R - one) * R - square(Sq - one);
        break;
    }
    const S mu1 = two * P * square(P - R + one) + P * (N - two) * square(P + one - R);
    return head + N * P * (R - one) * cube(Sq - one) + mu1 + two;
  });
}

IndexValue eval_sigma_power_level(std::int64_t n, std::int64_t p, EvalMode mode) {
  return dispatch(mode, [&]<class S>() {
    const S N(n), P(p), one(1), two(2);
    const S level1 = two * P;
    const S level2 = two * P * P;
    const S mu = N * P * (level1 - one) * square(level1 - level2);
    return N * P * (level1 - one) * cube(level2 - one) + level1 * square(one - P) + P * (N - two) * square(two - P) +
           mu + two;
  });
}

IndexValue eval_sigma_klevel(std::int64_t n, std::int64_t p, std::span<const std::int64_t> d, EvalMode mode) {
  if (d.empty()) throw InputError("sigma_klevel needs at least one level degree");
  return dispatch(mode, [&]<class S>() {
    const std::size_t k = d.size() + 1;
    const S N(n), P(p), one(1), two(2);
    // 1-based d_l with the closing convention d_k = 1.
    const auto level = [&](std::size_t l) { return l <= d.size() ? S(d[l - 1]) : one; };
    const auto product = [&](std::size_t upto) {
      S prod(1);
      for (std::size_t j = 1; j <= upto; ++j) prod *= level(j) - one;
      return prod;
    };
    S total(0);
    for (std::size_t l = 1; l <= k - 1; ++l) total += N * P * product(l - 1) * square(level(l) - level(l + 1));
    total += N * P * product(k - 2) * square(level(k - 1) - one);
    const S d1 = level(1);
    const S mu = two + two * P * square(P + one - d1) + P * (N - two) * square(P + two - d1);
    return total + mu;
  });
}

IndexValue sun_bound(std::int64_t pendants) {
  const IndexValue p(pendants);
  return (p - 1) * (p - 1) * (p - 1) + (p - 2) * (p - 2) + 1;
}

SunBoundCheck check_bound_sun(const Tree& tree) {
  SunBoundCheck out;
  const std::size_t n = tree.vertex_count();
  out.pendants = pendant_count(tree);
  out.sigma = sigma(tree);
  out.applicable = n >= 5 && out.pendants >= 3 && out.pendants + 2 <= n;
  if (!out.applicable) return out;
  out.bound = sun_bound(static_cast<std::int64_t>(out.pendants));
  out.slack = out.bound - out.sigma;
  out.holds = out.slack >= 0;
  return out;
}

LambdaBoundCheck check_bound_upper_lambda(const Tree& caterpillar) {
  const std::size_t n = caterpillar.vertex_count();
  if (n < 2) throw InputError("bound_upper_lambda needs at least two vertices");
  if (!is_caterpillar(caterpillar)) throw InputError("bound_upper_lambda applies to caterpillars only");
  const DegreeSequence ds = degree_sequence(caterpillar);
  const IndexValue order(static_cast<std::uint64_t>(n));
  const IndexValue m = order - 1;
  const Rational lambda(2 * m, order);

  IndexValue cubes = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const IndexValue diff = IndexValue(ds[i]) - ds[i + 1];
    cubes += diff * diff * diff;
  }
  LambdaBoundCheck out;
  out.lhs = Rational(sigma(caterpillar));
  out.rhs = lambda * Rational(cubes) + Rational(2 * (order * order + m * m) + 3 * m + order + 2);
  out.holds = out.lhs <= out.rhs;
  return out;
}

LambdaBoundCheck check_bound_upper_lambda(std::span<const std::uint32_t> spine_degrees) {
  return check_bound_upper_lambda(caterpillar_spine(spine_degrees));
}

GutmanExtremes eval_gutman_extremes(std::int64_t n) {
  if (n < 3) throw InputError("gutman extremes need n >= 3");
  const IndexValue N(n);
  return {(N - 1) * (N - 2), IndexValue(0), (N - 1) * (N - 2) * (N - 2)};
}

Arbitration arbitrate(FormulaId formula, const FamilySpec& params, EvalMode mode, std::size_t vertex_cap) {
  Arbitration a{formula, params, mode, 0, std::nullopt, ArbitrationVerdict::not_applicable, {}, {}};
  const auto scalar = [&](const char* key) { return params.scalar(key); };
  const auto size = [&](const char* key) {
    const std::int64_t v = params.scalar(key);
    if (v < 0) throw InputError(std::string(key) + " must be non-negative");
    return static_cast<std::size_t>(v);
  };

  std::optional<Tree> tree;
  bool use_albertson = false;

  switch (formula) {
    case FormulaId::sigma_double_star:
      a.printed_value = eval_sigma_double_star(scalar("r"), scalar("k"), mode);
      tree = double_star(size("r"), size("k"));
      break;
    case FormulaId::sigma_cnm:
      a.printed_value = eval_sigma_cnm(scalar("n"), scalar("m"), mode);
      tree = caterpillar_uniform(size("n"), size("m"));
      if (scalar("n") > 2) {
        a.note = "diagnostic (not printed): internal-count variant gives " +
                 to_string(eval_sigma_cnm_internal(scalar("n"), scalar("m")));
        if (scalar("n") == 3) a.note += "; worked n=3 line gives " + to_string(eval_sigma_cnm_n3_line(scalar("m")));
      }
      break;
    case FormulaId::albertson_cnm:
      a.printed_value = eval_albertson_cnm(scalar("n"), scalar("m"), mode);
      tree = caterpillar_uniform(size("n"), size("m"));
      use_albertson = true;
      break;
    case FormulaId::sigma_caterpillar_spine: {
      const auto& d = params.list("d");
      a.printed_value = eval_sigma_caterpillar_spine(d, mode);
      try {
        tree = caterpillar_spine(to_u32(d));
      } catch (const InfeasibleSpec& e) {
        a.note = e.what();
      }
      break;
    }
    case FormulaId::albertson_caterpillar: {
      const auto& d = params.list("d");
      const bool full = params.scalars.contains("reading") && params.scalar("reading") == 0;
      use_albertson = true;
      try {
        tree = caterpillar_spine(to_u32(d));
      } catch (const InfeasibleSpec& e) {
        a.note = e.what();
        a.printed_value = eval_albertson_caterpillar(d, mode);
        break;
      }
      if (full) {
        auto all = to_i64(degree_sequence(*tree).degrees());
        std::reverse(all.begin(), all.end());
        a.printed_value = eval_albertson_caterpillar(all, mode);
        a.note = "reading: full degree sequence, ascending";
      } else {
        a.printed_value = eval_albertson_caterpillar(d, mode);
        a.note = "reading: spine degrees";
      }
      break;
    }
    case FormulaId::sigma_3spine: {
      const auto& d = params.list("d");
      a.printed_value = eval_sigma_3spine(scalar("p"), d, mode);
      if (spine_consistent(scalar("p"), d)) {
        tree = caterpillar_spine(to_u32(d));
      } else {
        a.note = "degrees do not equal p plus spine adjacency; no constructive tree";
      }
      break;
    }
    case FormulaId::sigma_4spine_min:
    case FormulaId::sigma_4spine_max: {
      const auto& d = params.list("d");
      const auto which = formula == FormulaId::sigma_4spine_min ? SpineExtreme::min : SpineExtreme::max;
      a.printed_value = eval_sigma_4spine(scalar("p"), d, which, mode);
      const auto ordering = printed_4spine_ordering(d, which);
      if (spine_consistent(scalar("p"), ordering)) {
        tree = caterpillar_spine(to_u32(ordering));
      } else {
        a.note = "printed ordering is not p plus spine adjacency; no constructive tree";
      }
      break;
    }
    case FormulaId::sigma_3level:
      a.printed_value = eval_sigma_3level(scalar("n"), scalar("p"), scalar("r"), scalar("s"), mode);
      tree = three_level_tree(size("n"), size("p"), size("r"), size("s"), vertex_cap);
      break;
    case FormulaId::sigma_squared_level: {
      SquaredLevelReading reading = SquaredLevelReading::spliced;
      if (params.scalars.contains("reading")) reading = static_cast<SquaredLevelReading>(params.scalar("reading"));
      a.printed_value = eval_sigma_squared_level(scalar("n"), scalar("p"), scalar("r"), scalar("s"), mode, reading);
      a.note = "mu0 reading: " + std::string(reading_name(reading));
      tree = squared_level_tree(size("n"), size("p"), size("r"), size("s"), vertex_cap);
      break;
    }
    case FormulaId::sigma_power_level:
      a.printed_value = eval_sigma_power_level(scalar("n"), scalar("p"), mode);
      tree = power_level_tree(size("n"), size("p"), vertex_cap);
      break;
    case FormulaId::sigma_klevel: {
      const auto& d = params.list("d");
      a.printed_value = eval_sigma_klevel(scalar("n"), scalar("p"), d, mode);
      tree = k_level_tree(size("n"), size("p"), to_u32(d), vertex_cap);
      break;
    }
    default:
      throw InputError("formula " + std::string(formula_name(formula)) + " has no constructive arbitration");
  }

  if (tree) {
    a.oracle_value = use_albertson ? albertson(*tree) : sigma(*tree);
    a.verdict = *a.oracle_value == a.printed_value ? ArbitrationVerdict::match : ArbitrationVerdict::mismatch;
    if (tree->vertex_count() <= kWitnessVertexLimit) a.witness = serialize_tree_compact(*tree);
  }
  return a;
}

}  // namespace sigmalab
