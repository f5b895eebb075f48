#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include "k7p/congruence.hpp"
#include "k7p/moddata.hpp"
#include "k7p/report.hpp"
#include "k7p/verify0.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string format = "text";
  bool timing = false;
};

int emit(const Output& o, k7p::ReportDocument doc, const std::string& text, double seconds) {
  if (o.timing) doc.timing = nlohmann::json{{"seconds", seconds}};
  if (o.format == "json") {
    std::cout << doc.to_json().dump(2) << "\n";
  } else {
    std::cout << text;
    if (o.timing) std::cout << "time: " << seconds << " s\n";
  }
  return kOk;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void require_prime_above_28(k7p::u64 p) {
  if (!k7p::is_prime_u64(p)) throw UsageError(std::to_string(p) + " is not prime");
  if (p <= 28) throw UsageError("p must exceed 28");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factorization of K_7p mod p: closed form versus direct computation"};
  app.require_subcommand(1);
  Output out;
  app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", out.timing, "Include wall-clock time in the report");

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--timing", out.timing, "Include wall-clock time in the report");
  };

  k7p::u64 p = 0;
  unsigned bound = 6;
  k7p::u64 seed = 0;
  auto* factor = app.add_subcommand("factor", "Theorem and direct factorizations for one prime");
  factor->add_option("-p,--prime", p, "Prime p > 28")->required();
  factor->add_option("-e,--bound", bound, "Initial multiplicity bound")->check(CLI::Range(1u, 48u));
  factor->add_option("--seed", seed, "Equal-degree splitting seed");
  add_format(factor);

  k7p::u64 from = 0;
  k7p::u64 to = 0;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* sweep = app.add_subcommand("sweep", "Verify every prime in a range");
  sweep->add_option("--from", from, "First integer")->required();
  sweep->add_option("--to", to, "Last integer")->required();
  sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--seed", seed, "Equal-degree splitting seed");
  add_format(sweep);

  std::vector<std::string> which;
  auto* tables = app.add_subcommand("tables", "Reconstruct tabulated values and identities");
  tables->add_option("--check", which, "Suites: 1..6, inline, identities, d4, resultants, q171, bold, h171")
      ->required()
      ->delimiter(',');
  tables->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_format(tables);

  k7p::u64 D = 0;
  auto* classnum = app.add_subcommand("classnum", "Class number h(-D)");
  classnum->add_option("-d", D, "D = 0 or 3 mod 4")->required();
  add_format(classnum);

  std::string emit_path;
  auto* phi = app.add_subcommand("phi7", "Write the level-7 modular polynomial");
  phi->add_option("--emit", emit_path, "Output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (*factor) {
      require_prime_above_28(p);
      const k7p::CongruenceReport r = k7p::verify_prime(k7p::PrimeModulus(p), {bound, seed});
      k7p::ReportDocument doc;
      doc.command = "factor";
      doc.inputs = {{"p", p}, {"bound", bound}, {"seed", seed}};
      doc.results = k7p::congruence_report_json(r);
      emit(out, std::move(doc), k7p::render_factor_text(r), since(t0));
      return r.verdict == k7p::Verdict::mismatch ? kMismatch : kOk;
    }
    if (*sweep) {
      if (from <= 28 || from > to) throw UsageError("need 28 < from <= to");
      const auto entries = k7p::sweep(from, to, jobs, {6, seed});
      k7p::ReportDocument doc;
      doc.command = "sweep";
      doc.inputs = {{"from", from}, {"to", to}, {"seed", seed}};
      doc.results = k7p::sweep_json(entries);
      emit(out, std::move(doc), k7p::render_sweep_text(entries), since(t0));
      return k7p::summarize(entries).clean() ? kOk : kMismatch;
    }
    if (*tables) {
      for (const auto& w : which) {
        if (!k7p::is_known_suite(w)) throw UsageError("unknown check '" + w + "'");
      }
      const auto results = k7p::run_checks(which, jobs);
      nlohmann::json rows = nlohmann::json::array();
      bool ok = true;
      for (const auto& r : results) {
        rows.push_back(k7p::table_result_json(r));
        ok = ok && r.ok();
      }
      k7p::ReportDocument doc;
      doc.command = "tables";
      doc.inputs = {{"check", which}};
      doc.results = rows;
      emit(out, std::move(doc), k7p::render_tables_text(results), since(t0));
      return ok ? kOk : kMismatch;
    }
    if (*classnum) {
      if (D == 0 || (D % 4 != 0 && D % 4 != 3) || D >= (k7p::u64{1} << 40)) {
        throw UsageError("D must be positive, 0 or 3 mod 4, and below 2^40");
      }
      const k7p::u64 h = k7p::class_number(D);
      k7p::ReportDocument doc;
      doc.command = "classnum";
      doc.inputs = {{"D", D}};
      doc.results = {{"h", h}};
      emit(out, std::move(doc), "h(-" + std::to_string(D) + ") = " + std::to_string(h) + "\n", since(t0));
      return kOk;
    }
    if (*phi) {
      std::ofstream f(emit_path);
      if (!f) throw UsageError("cannot write " + emit_path);
      f << k7p::format_bivariate_section("phi7", k7p::phi7());
      if (!f.flush()) throw std::runtime_error("write failed: " + emit_path);
      std::cout << "wrote " << k7p::phi7().monomials().size() << " monomials to " << emit_path << "\n";
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}
