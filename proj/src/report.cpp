#include "k7p/report.hpp"

#include <sstream>

namespace k7p {

using nlohmann::json;

json ReportDocument::to_json() const {
  json j{{"schema_version", schema_version}, {"command", command}, {"inputs", inputs}, {"results", results}};
  if (timing) j["timing"] = *timing;
  return j;
}

ReportDocument ReportDocument::from_json(const json& j) {
  ReportDocument d;
  d.schema_version = j.at("schema_version").get<int>();
  d.command = j.at("command").get<std::string>();
  d.inputs = j.at("inputs");
  d.results = j.at("results");
  if (j.contains("timing")) d.timing = j.at("timing");
  return d;
}

json factor_map_json(const FactorMap& f, u64 p) {
  json factors = json::array();
  for (const auto& e : f.entries()) {
    const auto c = e.factor.coeffs();
    factors.push_back({{"coeffs", std::vector<u64>(c.begin(), c.end())}, {"exponent", e.exponent}});
  }
  return {{"modulus", p}, {"degree", f.degree()}, {"factors", factors}};
}

FactorMap factor_map_from_json(const json& j) {
  const PrimeModulus m(j.at("modulus").get<u64>());
  FactorMap f;
  for (const auto& e : j.at("factors")) {
    f.insert_new(FpPoly(m, e.at("coeffs").get<std::vector<u64>>()), e.at("exponent").get<unsigned>());
  }
  return f;
}

json congruence_report_json(const CongruenceReport& r) {
  json j{{"p", r.p},
         {"applicable", r.applicable},
         {"verdict", to_string(r.verdict)},
         {"degree", r.degree},
         {"h28p", r.h28},
         {"h7p", r.h7 ? json(*r.h7) : json(nullptr)},
         {"expected_degree", r.expected_degree()},
         {"direct_bound", r.direct_bound},
         {"direct_side", factor_map_json(r.direct_side, r.p)},
         {"theorem_side", r.theorem_side ? factor_map_json(*r.theorem_side, r.p) : json(nullptr)},
         {"notes", r.notes}};
  if (r.epsilons) {
    j["epsilons"] = {{"active", r.epsilons->active()},
                     {"sqrt57", r.epsilons->sqrt57 ? json(*r.epsilons->sqrt57) : json(nullptr)}};
  } else {
    j["epsilons"] = nullptr;
  }
  return j;
}

json table_result_json(const TableCheckResult& r) {
  return {{"table", r.table},   {"row", r.row},           {"computed", r.computed},
          {"expected", r.expected}, {"status", to_string(r.status)}, {"detail", r.detail}};
}

SweepSummary summarize(const std::vector<SweepEntry>& entries) {
  SweepSummary s;
  for (const auto& e : entries) {
    if (!e.report) {
      ++s.error;
      continue;
    }
    switch (e.report->verdict) {
      case Verdict::match:
        ++s.match;
        break;
      case Verdict::mismatch:
        ++s.mismatch;
        break;
      case Verdict::not_applicable:
        ++s.not_applicable;
        break;
    }
  }
  return s;
}

json sweep_json(const std::vector<SweepEntry>& entries) {
  json primes = json::array();
  for (const auto& e : entries) {
    if (e.report) {
      primes.push_back(congruence_report_json(*e.report));
    } else {
      primes.push_back({{"p", e.p}, {"verdict", "error"}, {"error", e.error}});
    }
  }
  const SweepSummary s = summarize(entries);
  return {{"summary", {{"match", s.match}, {"mismatch", s.mismatch}, {"not-applicable", s.not_applicable},
                       {"error", s.error}}},
          {"primes", primes}};
}

std::string render_factor_text(const CongruenceReport& r) {
  std::ostringstream out;
  out << "p = " << r.p << (r.applicable ? " (applicable)" : " (not applicable)") << "\n";
  if (r.epsilons) {
    out << "active d:";
    for (int d : r.epsilons->active()) out << ' ' << d;
    if (r.epsilons->sqrt57) out << "  (sqrt 57 = " << *r.epsilons->sqrt57 << ")";
    out << "\n";
  }
  if (r.theorem_side) out << "theorem: " << r.theorem_side->to_string() << "\n";
  out << "direct:  " << r.direct_side.to_string() << "\n";
  out << "deg K = " << r.degree << ", h(-28p) = " << r.h28;
  if (r.h7) out << ", h(-7p) = " << *r.h7;
  out << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  out << "verdict: " << to_string(r.verdict) << "\n";
  return out.str();
}

std::string render_sweep_text(const std::vector<SweepEntry>& entries) {
  std::ostringstream out;
  for (const auto& e : entries) {
    out << e.p << ' ';
    if (!e.report) {
      out << "error: " << e.error << "\n";
      continue;
    }
    out << to_string(e.report->verdict) << " deg " << e.report->degree;
    for (const auto& n : e.report->notes) out << " [" << n << "]";
    out << "\n";
  }
  const SweepSummary s = summarize(entries);
  out << "summary: match " << s.match << ", mismatch " << s.mismatch << ", not-applicable " << s.not_applicable
      << ", error " << s.error << "\n";
  return out.str();
}

std::string render_tables_text(const std::vector<TableCheckResult>& results) {
  std::ostringstream out;
  std::size_t bad = 0;
  for (const auto& r : results) {
    out << r.table << ' ' << r.row << ": " << to_string(r.status);
    if (!r.detail.empty()) out << " (" << r.detail << ")";
    if (!r.ok()) {
      ++bad;
      out << "\n  computed " << r.computed << "\n  expected " << r.expected;
    }
    out << "\n";
  }
  out << results.size() - bad << "/" << results.size() << " rows ok\n";
  return out.str();
}

}  // namespace k7p
