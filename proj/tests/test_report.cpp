#include <doctest.h>

#include "k7p/report.hpp"
#include "support.hpp"

using namespace k7p;

TEST_CASE("factor maps serialize as ascending coefficient arrays") {
  const PrimeModulus p(211);
  const FactorMap f = testing::parse_golden(testing::kGolden211, p);
  const nlohmann::json j = factor_map_json(f, 211);
  CHECK(j["modulus"] == 211);
  CHECK(j["degree"] == 16);
  CHECK(j["factors"][0]["coeffs"] == nlohmann::json::array({13, 1}));
  CHECK(j["factors"][0]["exponent"] == 4);
  CHECK(factor_map_from_json(j) == f);
}

TEST_CASE("report documents round-trip and are reproducible") {
  const CongruenceReport r = verify_prime(PrimeModulus(241));
  ReportDocument doc;
  doc.command = "factor";
  doc.inputs = {{"p", 241}};
  doc.results = congruence_report_json(r);
  const std::string text = doc.to_json().dump();
  CHECK(ReportDocument::from_json(nlohmann::json::parse(text)) == doc);
  CHECK_FALSE(doc.to_json().contains("timing"));

  ReportDocument again = doc;
  again.results = congruence_report_json(verify_prime(PrimeModulus(241)));
  CHECK(again.to_json().dump() == text);

  // Text and structured output describe the same factors.
  const FactorMap from_json = factor_map_from_json(doc.results["theorem_side"]);
  CHECK(render_factor_text(r).find("theorem: " + from_json.to_string()) != std::string::npos);
  CHECK(doc.results["verdict"] == "match");
  CHECK(doc.results["epsilons"]["active"] == nlohmann::json::array({7, 19, 28, 52}));
}

TEST_CASE("sweep summaries") {
  std::vector<SweepEntry> entries = sweep(305, 317, 1);
  entries.push_back({999983, std::nullopt, "synthetic failure"});
  const SweepSummary s = summarize(entries);
  CHECK(s.match == 1);           // 311
  CHECK(s.not_applicable == 3);  // 307, 313, 317
  CHECK(s.error == 1);
  CHECK_FALSE(s.clean());
  const nlohmann::json j = sweep_json(entries);
  CHECK(j["summary"]["not-applicable"] == 3);
  CHECK(j["primes"].size() == 5);
  CHECK(render_sweep_text(entries).find("summary: match 1, mismatch 0, not-applicable 3, error 1") !=
        std::string::npos);
}

TEST_CASE("table results render their status") {
  const std::vector<TableCheckResult> rows{{"table1", "d=3", "1", "1", CheckStatus::exact_match, ""},
                                           {"d4", "N(Q)", "{}", "{181}", CheckStatus::mismatch, "x"}};
  const std::string t = render_tables_text(rows);
  CHECK(t.find("table1 d=3: exact-match") != std::string::npos);
  CHECK(t.find("1/2 rows ok") != std::string::npos);
  CHECK(table_result_json(rows[1])["status"] == "mismatch");
}
