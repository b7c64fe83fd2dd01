#include "sigmalab/report.hpp"

#include <unistd.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <ctime>

#include "sigmalab/errors.hpp"

namespace sigmalab {

using nlohmann::ordered_json;

namespace {

constexpr std::array<const char*, 6> kSelectors = {"greedy_min", "class_minima", "gutman",
                                                   "formulas",   "bounds",       "table1"};

ordered_json params_to_json(const FamilySpec& params) {
  ordered_json out = ordered_json::object();
  for (const auto& [key, value] : params.scalars) out[key] = value;
  for (const auto& [key, values] : params.lists) out[key] = values;
  return out;
}

ordered_json provenance_block() {
  std::array<char, 256> host{};
  if (gethostname(host.data(), host.size() - 1) != 0) host[0] = '\0';
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::array<char, 32> stamp{};
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::strftime(stamp.data(), stamp.size(), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return {{"generated_at", stamp.data()}, {"host", host.data()}};
}

}  // namespace

ordered_json claim_to_json(const ClaimReport& claim) {
  ordered_json witnesses = ordered_json::array();
  for (const Witness& w : claim.witnesses) {
    witnesses.push_back({{"input", w.input}, {"expected", w.expected}, {"actual", w.actual}, {"tree", w.tree}});
  }
  return {{"claim_id", claim.claim_id},
          {"statement", claim.statement},
          {"verdict", verdict_name(claim.verdict)},
          {"scope", claim.scope},
          {"reason", claim.reason},
          {"witnesses", std::move(witnesses)},
          {"details", claim.details}};
}

ordered_json arbitration_to_json(const Arbitration& a) {
  return {{"formula", formula_name(a.formula)},
          {"params", params_to_json(a.params)},
          {"mode", mode_name(a.mode)},
          {"printed_value", to_string(a.printed_value)},
          {"oracle_value", a.oracle_value ? ordered_json(to_string(*a.oracle_value)) : ordered_json(nullptr)},
          {"verdict", verdict_name(a.verdict)},
          {"witness", a.witness},
          {"note", a.note}};
}

ordered_json build_report(const VerifyOptions& options) {
  std::vector<std::string> active;
  for (const std::string& s : options.selectors) {
    if (s == "all") {
      active.assign(kSelectors.begin(), kSelectors.end());
      break;
    }
    if (std::find_if(kSelectors.begin(), kSelectors.end(), [&](const char* k) { return s == k; }) == kSelectors.end()) {
      throw InputError("unknown claim selector '" + s + "'");
    }
  }
  if (active.empty()) {
    for (const char* k : kSelectors) {
      if (std::find(options.selectors.begin(), options.selectors.end(), k) != options.selectors.end()) {
        active.emplace_back(k);
      }
    }
  }
  const auto on = [&](const char* k) { return std::find(active.begin(), active.end(), k) != active.end(); };

  ordered_json claims = ordered_json::array();
  ordered_json arbitrations = ordered_json::array();
  const auto push = [&](const std::vector<ClaimReport>& list) {
    for (const ClaimReport& c : list) claims.push_back(claim_to_json(c));
  };
  if (on("greedy_min")) push(verify_greedy_min(options.nmax, options.jobs));
  if (on("class_minima")) push(verify_class_minima(options.nmax, options.jobs));
  if (on("gutman")) push(verify_gutman_extremes(options.nmax, options.jobs));
  if (on("formulas")) {
    for (FormulaId f : grid_formulas()) {
      const FormulaGridResult r = verify_formula_grid(f, formula_grid(f, options.grid), options.mode);
      push(r.claims);
      for (const Arbitration& a : r.arbitrations) arbitrations.push_back(arbitration_to_json(a));
    }
  }
  if (on("bounds")) push(verify_bounds(options.nmax, options.jobs));
  if (on("table1")) push(reproduce_table1(3, 12, options.mode));

  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool_mode"] = mode_name(options.mode);
  doc["generated_scope"] = {{"selectors", active},
                            {"nmax", options.nmax},
                            {"grid", grid_name(options.grid)},
                            {"table_p_range", {3, 12}}};
  if (options.provenance) doc["provenance"] = provenance_block();
  doc["claims"] = std::move(claims);
  doc["arbitrations"] = std::move(arbitrations);
  return doc;
}

std::string render_json(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace sigmalab
