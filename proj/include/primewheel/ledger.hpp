#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace primewheel {

// One recorded numeric claim, recomputable by a single library operation.
struct LedgerClaim {
  std::string id;
  std::string kind;  // prime_count, constellation_count, goldbach_count,
                     // estimate, ratio, factorization, inequality, survivor_count
  nlohmann::json inputs;
  double expected;
  std::optional<double> tolerance;  // absent = exact
  bool curated;                     // failures flip the process exit status
  std::string citation_section;
  std::string citation_quote;
};

// The ledger compiled into the library (from data/ledger.json).
const std::string& embedded_ledger_json();

std::vector<LedgerClaim> parse_ledger(const nlohmann::json& doc);
std::vector<LedgerClaim> load_embedded_ledger();

struct VerifyEntry {
  std::string id;
  std::string kind;
  nlohmann::json inputs;
  double expected;
  double recomputed;
  bool pass;
  bool curated;
  std::string citation;
};

struct VerifySummary {
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  std::int64_t curated_failed = 0;
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;
  VerifySummary summary;
};

// Recomputes one claim through the corresponding library operation.
double recompute_claim(const LedgerClaim& claim);

// Recomputes every claim matching the filter (empty = all). A filter
// selects claims whose kind equals it or whose id contains it; a filter
// matching nothing is an error. Entries are ordered as in the ledger
// regardless of thread count.
VerifyReport run_verify(const std::vector<LedgerClaim>& claims,
                        const std::string& filter = "", unsigned threads = 1);

void to_json(nlohmann::json& j, const VerifyEntry& e);
void from_json(const nlohmann::json& j, VerifyEntry& e);
void to_json(nlohmann::json& j, const VerifyReport& r);
void from_json(const nlohmann::json& j, VerifyReport& r);

std::string report_csv(const VerifyReport& r);
std::string report_text(const VerifyReport& r);

}  // namespace primewheel
