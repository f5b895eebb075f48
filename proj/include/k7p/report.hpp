#ifndef K7P_REPORT_HPP
#define K7P_REPORT_HPP

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "k7p/congruence.hpp"
#include "k7p/verify0.hpp"

namespace k7p {

inline constexpr int kSchemaVersion = 1;

/// Machine-readable output of one CLI command.
struct ReportDocument {
  int schema_version = kSchemaVersion;
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results;
  std::optional<nlohmann::json> timing;  // only when requested, so reports stay reproducible

  nlohmann::json to_json() const;
  static ReportDocument from_json(const nlohmann::json& j);

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

/// {"modulus", "degree", "factors": [{"coeffs": ascending, "exponent"}]}.
nlohmann::json factor_map_json(const FactorMap& f, u64 p);
FactorMap factor_map_from_json(const nlohmann::json& j);

nlohmann::json congruence_report_json(const CongruenceReport& r);
nlohmann::json table_result_json(const TableCheckResult& r);

struct SweepSummary {
  u64 match = 0;
  u64 mismatch = 0;
  u64 not_applicable = 0;
  u64 error = 0;

  bool clean() const { return mismatch == 0 && error == 0; }
};
SweepSummary summarize(const std::vector<SweepEntry>& entries);

nlohmann::json sweep_json(const std::vector<SweepEntry>& entries);

std::string render_factor_text(const CongruenceReport& r);
std::string render_sweep_text(const std::vector<SweepEntry>& entries);
std::string render_tables_text(const std::vector<TableCheckResult>& results);

}  // namespace k7p

#endif  // K7P_REPORT_HPP
