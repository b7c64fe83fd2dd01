#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sigmalab/enumeration.hpp"
#include "sigmalab/errors.hpp"
#include "sigmalab/extremal.hpp"
#include "sigmalab/families.hpp"
#include "sigmalab/indices.hpp"
#include "sigmalab/report.hpp"
#include "sigmalab/tree.hpp"

using namespace sigmalab;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kInternal = 1, kParse = 2, kInfeasible = 3, kResource = 4 };

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

std::string code_text(const LevelSequence& code) {
  std::string out;
  for (std::uint32_t v : code) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

int run_compute(const std::string& input, const std::vector<std::string>& indices, bool json) {
  const Tree tree = parse_tree(read_input(input));
  const IndexSet all = all_indices(tree);
  const std::vector<std::pair<std::string, const IndexValue*>> known = {
      {"sigma", &all.sigma}, {"irr", &all.irr}, {"m1", &all.m1}, {"m2", &all.m2}, {"f", &all.f}};
  std::vector<std::pair<std::string, const IndexValue*>> chosen;
  if (indices.empty()) {
    chosen = known;
  } else {
    for (const std::string& name : indices) {
      const auto it = std::find_if(known.begin(), known.end(), [&](const auto& k) { return k.first == name; });
      if (it == known.end()) throw InputError("unknown index '" + name + "'");
      chosen.push_back(*it);
    }
  }
  if (json) {
    ordered_json out = ordered_json::object();
    for (const auto& [name, value] : chosen) out[name] = to_string(*value);
    std::cout << out.dump() << '\n';
  } else {
    std::string line;
    for (const auto& [name, value] : chosen) {
      if (!line.empty()) line += ", ";
      line += name + ": " + to_string(*value);
    }
    std::cout << line << '\n';
  }
  return kOk;
}

int run_construct(const std::string& spec_text, const std::string& out, const std::string& dot) {
  const Tree tree = build_family(parse_family_spec(spec_text));
  write_output(out, serialize_tree(tree));
  if (!dot.empty()) write_output(dot, to_dot(tree));
  return kOk;
}

int run_enumerate(std::size_t n, const std::string& cls_name, const std::string& emit, std::size_t jobs) {
  const TreeClass cls = class_from_name(cls_name);
  if (emit == "count") {
    std::cout << count_by_class(n, cls, jobs) << '\n';
    return kOk;
  }
  if (emit != "edges" && emit != "canon") throw InputError("unknown --emit '" + emit + "'");
  // The stream runs in descending code order; output is ascending.
  const auto codes = reduce_free_trees<std::vector<LevelSequence>>(
      n, jobs,
      [cls](std::vector<LevelSequence>& acc, const Tree& t, const LevelSequence& code) {
        if (in_class(t, cls)) acc.push_back(code);
      },
      [](std::vector<LevelSequence>& total, std::vector<LevelSequence>&& part) {
        total.insert(total.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
      });
  std::string out;
  for (auto it = codes.rbegin(); it != codes.rend(); ++it) {
    out += emit == "canon" ? code_text(*it) : serialize_tree_compact(tree_from_level_sequence(*it));
    out += '\n';
  }
  std::cout << out;
  return kOk;
}

int run_verify(const VerifyOptions& options, const std::string& out) {
  write_output(out, render_json(build_report(options)));
  return kOk;
}

int run_search(std::size_t n_lo, std::size_t n_hi, const std::vector<std::string>& classes, const std::string& emit,
               std::size_t jobs) {
  if (emit != "csv" && emit != "json") throw InputError("unknown --emit '" + emit + "'");
  if (n_lo == 0 || n_lo > n_hi) throw InputError("search needs 1 <= nmin <= nmax");
  check_enumeration_order(n_hi);
  std::vector<TreeClass> cls;
  for (const std::string& name : classes) cls.push_back(class_from_name(name));

  std::string csv = "n,class,min,max,witness_count\n";
  ordered_json rows = ordered_json::array();
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    for (TreeClass c : cls) {
      const ExtremalResult r = extremal_sigma(n, c, jobs);
      std::set<std::string> distinct(r.min_witnesses.begin(), r.min_witnesses.end());
      distinct.insert(r.max_witnesses.begin(), r.max_witnesses.end());
      const std::string lo = r.empty ? "" : to_string(r.min_value);
      const std::string hi = r.empty ? "" : to_string(r.max_value);
      csv += std::to_string(n) + "," + std::string(class_name(c)) + "," + lo + "," + hi + "," +
             std::to_string(distinct.size()) + "\n";
      ordered_json row = {{"n", n}, {"class", class_name(c)}, {"count", r.count}, {"empty", r.empty}};
      row["min"] = r.empty ? ordered_json(nullptr) : ordered_json(lo);
      row["max"] = r.empty ? ordered_json(nullptr) : ordered_json(hi);
      row["min_witnesses"] = r.min_witnesses;
      row["max_witnesses"] = r.max_witnesses;
      rows.push_back(std::move(row));
    }
  }
  std::cout << (emit == "csv" ? csv : render_json(rows));
  return kOk;
}

int run_table1(EvalMode mode, bool json) {
  const auto claims = reproduce_table1(3, 12, mode);
  if (json) {
    ordered_json out = ordered_json::array();
    for (const ClaimReport& c : claims) out.push_back(claim_to_json(c));
    std::cout << render_json(out);
    return kOk;
  }
  const ordered_json& d = claims.front().details;
  const std::string key(mode_name(mode));
  const auto& best = d["closest"][key];
  const auto find_series = [&](const ordered_json& fit, const char* column) -> const ordered_json& {
    for (const auto& s : d["series"]) {
      if (s["column"] == column && s["interpretation"] == fit["interpretation"] &&
          s.value("reading", "") == fit.value("reading", "")) {
        return s;
      }
    }
    throw std::logic_error("closest series missing");
  };
  const auto& st = find_series(best["sigma_T"], "sigma_T");
  const auto& st1 = find_series(best["sigma_T1"], "sigma_T1");
  std::ostringstream out;
  out << "mode " << key << "; sigma(T): " << best["sigma_T"]["interpretation"].get<std::string>()
      << "; sigma(T1): " << best["sigma_T1"]["interpretation"].get<std::string>() << " "
      << best["sigma_T1"]["reading"].get<std::string>() << "\n";
  out << "p,printed_T,computed_T,printed_T1,computed_T1\n";
  for (std::size_t i = 0; i < d["targets"].size(); ++i) {
    const auto& t = d["targets"][i];
    out << t["p"].get<std::int64_t>() << "," << t["sigma_T"].get<std::string>() << ","
        << st[key][i].get<std::string>() << "," << t["sigma_T1"].get<std::string>() << ","
        << st1[key][i].get<std::string>() << "\n";
  }
  for (const ClaimReport& c : claims) {
    out << c.claim_id << ": " << verdict_name(c.verdict);
    if (!c.reason.empty()) out << " (" << c.reason << ")";
    out << "\n";
  }
  std::cout << out.str();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sigma-lab: tree irregularity indices and claim verification"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "print degree-based indices of a tree");
  std::string input = "-";
  std::vector<std::string> indices;
  bool compute_json = false;
  compute->add_option("input", input, "tree file, or - for stdin");
  compute->add_option("--indices", indices, "subset of sigma,irr,m1,m2,f")->delimiter(',');
  compute->add_flag("--json", compute_json, "emit JSON");

  auto* construct = app.add_subcommand("construct", "build a tree from a family spec");
  std::string spec, out_path, dot_path;
  construct->add_option("--spec", spec, "family=<name>;key=value;...")->required();
  construct->add_option("--out", out_path, "output file (default stdout)");
  construct->add_option("--dot", dot_path, "also write DOT to this file");

  auto* enumerate = app.add_subcommand("enumerate", "list free trees on n vertices");
  std::size_t n = 0;
  std::string cls = "all", emit = "edges";
  std::size_t jobs = 1;
  enumerate->add_option("--n", n, "order")->required();
  enumerate->add_option("--class", cls, "all|caterpillar|greedy_realizable|non_caterpillar_non_greedy");
  enumerate->add_option("--emit", emit, "edges|canon|count");
  enumerate->add_option("--jobs", jobs, "worker threads");

  auto* verify = app.add_subcommand("verify", "evaluate claims and write the JSON report");
  VerifyOptions options;
  std::string grid = "default", mode = "exact", report_path;
  verify->add_option("--claims", options.selectors, "greedy_min,class_minima,gutman,formulas,bounds,table1,all")
      ->delimiter(',');
  verify->add_option("--nmax", options.nmax, "largest order for enumeration-backed claims");
  verify->add_option("--grid", grid, "default|small");
  verify->add_option("--mode", mode, "exact|wrap32");
  verify->add_option("--out", report_path, "report file (default stdout)");
  verify->add_option("--jobs", options.jobs, "worker threads");
  verify->add_flag("--provenance", options.provenance, "include host and timestamp");

  auto* search = app.add_subcommand("search", "extremal sigma per order and class");
  std::size_t search_lo = 3, search_hi = 0;
  std::vector<std::string> search_classes = {"all"};
  std::string search_emit = "csv";
  search->add_option("--n", search_hi, "single order (sets both bounds)");
  search->add_option("--nmin", search_lo, "smallest order");
  search->add_option("--nmax", search_hi, "largest order");
  search->add_option("--class", search_classes, "tree classes")->delimiter(',');
  search->add_option("--emit", search_emit, "csv|json");
  search->add_option("--jobs", jobs, "worker threads");

  auto* table = app.add_subcommand("table1", "reproduce the n = 10 comparison table");
  std::string table_mode = "exact";
  bool table_json = false;
  table->add_option("--mode", table_mode, "exact|wrap32");
  table->add_flag("--json", table_json, "emit the claim reports as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*compute) return run_compute(input, indices, compute_json);
    if (*construct) return run_construct(spec, out_path, dot_path);
    if (*enumerate) return run_enumerate(n, cls, emit, jobs);
    if (*verify) {
      options.grid = grid_from_name(grid);
      options.mode = mode_from_name(mode);
      return run_verify(options, report_path);
    }
    if (*search) {
      if (search->count("--n") > 0 && search->count("--nmin") == 0) search_lo = search_hi;
      if (search_hi == 0) throw InputError("search needs --n or --nmax");
      return run_search(search_lo, search_hi, search_classes, search_emit, jobs);
    }
    if (*table) return run_table1(mode_from_name(table_mode), table_json);
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return kParse;
  } catch (const InfeasibleSpec& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
