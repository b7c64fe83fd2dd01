#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "sigmalab/extremal.hpp"
#include "sigmalab/formulas.hpp"

namespace sigmalab {

inline constexpr const char* kSchemaVersion = "sigma-lab/1";

struct VerifyOptions {
  // Any of greedy_min, class_minima, gutman, formulas, bounds, table1, all.
  std::vector<std::string> selectors = {"all"};
  std::size_t nmax = 9;
  GridPreset grid = GridPreset::standard;
  EvalMode mode = EvalMode::exact;
  std::size_t jobs = 1;
  bool provenance = false;  // adds host and timestamp; off keeps output reproducible
};

nlohmann::ordered_json claim_to_json(const ClaimReport& claim);
nlohmann::ordered_json arbitration_to_json(const Arbitration& a);

// The report document. Claims appear in a fixed selector order whatever the
// order requested; nothing depends on `jobs`. Throws InputError for an
// unknown selector and ResourceError when a cap is exceeded.
nlohmann::ordered_json build_report(const VerifyOptions& options);

// Two-space indented JSON with a trailing newline.
std::string render_json(const nlohmann::ordered_json& doc);

}  // namespace sigmalab
