#include "hooklab/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hooklab/functional.hpp"
#include "hooklab/io.hpp"
#include "hooklab/partition.hpp"
#include "hooklab/verify.hpp"

namespace hooklab::cli {

namespace {

constexpr int kPartitionsMaxN = 40;

using nlohmann::json;

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int cmd_partitions(const RunConfig& cfg, int n, std::ostream& out) {
  if (n < 0 || n > kPartitionsMaxN) {
    throw std::out_of_range("partitions: N must lie in [0, " + std::to_string(kPartitionsMaxN) + "]");
  }
  const auto parts = enumerate_partitions(n);
  switch (cfg.format) {
    case OutputFormat::json: {
      json arr = json::array();
      for (const auto& p : parts) arr.push_back(partition_to_json(p));
      out << arr.dump() << "\n";
      break;
    }
    case OutputFormat::csv:
      out << "partition,syt_count\n";
      for (const auto& p : parts) out << to_string(p) << "," << to_string(syt_count(p)) << "\n";
      break;
    case OutputFormat::text:
      for (const auto& p : parts) out << to_string(p) << "\n";
      break;
  }
  return kExitOk;
}

FunctionalSpec make_spec(const std::string& expr, const std::string& alphabets) {
  FunctionalSpec spec{parse_symexpr(expr), parse_binding(alphabets)};
  spec.validate();
  return spec;
}

std::string binding_string(const FunctionalSpec& spec) {
  std::string s;
  for (const auto& [slot, kind] : spec.binding) {
    if (!s.empty()) s += ",";
    s += slot;
    s += "=";
    s += to_string(kind);
  }
  return s;
}

int cmd_value(const RunConfig& cfg, const std::string& expr, const std::string& alphabets, int n, std::ostream& out) {
  if (n < 0) throw std::out_of_range("value: --n must be nonnegative");
  const FunctionalSpec spec = make_spec(expr, alphabets);
  const Rational v = functional_value(spec, n, cfg.jobs);
  switch (cfg.format) {
    case OutputFormat::json:
      out << json{{"expr", to_string(spec.expr)}, {"alphabets", binding_string(spec)}, {"n", n}, {"value", to_string(v)}}.dump()
          << "\n";
      break;
    case OutputFormat::csv:
      out << "n,value\n" << n << "," << to_string(v) << "\n";
      break;
    case OutputFormat::text:
      out << to_string(v) << "\n";
      break;
  }
  return kExitOk;
}

int cmd_fit(const RunConfig& cfg, const std::string& expr, const std::string& alphabets, std::optional<int> hint,
            std::ostream& out, std::ostream& err) {
  const FunctionalSpec spec = make_spec(expr, alphabets);
  FitOptions options;
  options.degree_hint = hint;
  options.jobs = cfg.jobs;
  const FitReport report = fit_functional(spec, options);
  switch (cfg.format) {
    case OutputFormat::json:
      out << fit_report_to_json(report).dump() << "\n";
      break;
    case OutputFormat::csv:
      out << "polynomial,degree,first_sample,last_sample,verified\n"
          << poly_to_csv_cell(report.polynomial) << "," << report.polynomial.degree() << "," << report.first_sample << ","
          << report.last_sample << "," << (report.verified ? "true" : "false") << "\n";
      break;
    case OutputFormat::text:
      out << "polynomial: " << to_string(report.polynomial) << "\n"
          << "degree: " << report.polynomial.degree() << "\n"
          << "samples: n=" << report.first_sample << ".." << report.last_sample << "\n"
          << "verified: " << (report.verified ? "yes" : "no") << "\n";
      break;
  }
  if (!report.verified) {
    err << "fit: not polynomial within the degree cap " << degree_cap(spec) << "\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int cmd_tables(const RunConfig& cfg, const std::string& which, std::ostream& out, std::ostream& err) {
  std::vector<TableEntry> table;
  if (which == "nmu") table = n_mu_table(cfg.jobs);
  else if (which == "phimu") table = phi_e_mu_table(cfg.jobs);
  else throw std::invalid_argument("tables: expected nmu or phimu, got '" + which + "'");

  bool all_match = true;
  json entries = json::array();
  if (cfg.format == OutputFormat::csv) out << "mu,polynomial,degree,verified,matches_reference\n";
  for (const auto& e : table) {
    all_match = all_match && e.matches();
    if (!e.matches()) {
      err << "FAIL tables " << which << " mu=" << to_string(e.mu) << ": fitted " << to_string(e.fit.polynomial)
          << ", reference " << to_string(e.golden) << "\n";
    }
    switch (cfg.format) {
      case OutputFormat::json:
        entries.push_back({{"mu", partition_to_json(e.mu)},
                           {"polynomial", poly_to_json(e.fit.polynomial)},
                           {"degree", e.fit.polynomial.degree()},
                           {"verified", e.fit.verified},
                           {"matches_reference", e.matches()}});
        break;
      case OutputFormat::csv:
        out << to_string(e.mu) << "," << poly_to_csv_cell(e.fit.polynomial) << "," << e.fit.polynomial.degree() << ","
            << (e.fit.verified ? "true" : "false") << "," << (e.matches() ? "true" : "false") << "\n";
        break;
      case OutputFormat::text:
        out << (e.matches() ? "ok   " : "FAIL ") << to_string(e.mu) << ": " << to_string(e.fit.polynomial) << "\n";
        break;
    }
  }
  if (cfg.format == OutputFormat::json) out << json{{"table", which}, {"entries", entries}, {"passed", all_match}}.dump() << "\n";
  return all_match ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const RunConfig& cfg, const std::string& family, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.max_n = cfg.max_n;
  options.jobs = cfg.jobs;
  options.seed = cfg.seed;
  const auto records = run_verify(family, options);
  const auto failed = std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.passed; });
  for (const auto& r : records) {
    if (!r.passed) err << "FAIL " << r.family << " " << r.label << ": " << r.detail << "\n";
  }
  switch (cfg.format) {
    case OutputFormat::json: {
      json results = json::array();
      for (const auto& r : records) {
        results.push_back({{"family", r.family}, {"case", r.label}, {"passed", r.passed}, {"detail", r.detail}});
      }
      out << json{{"command", "verify"}, {"family", family}, {"results", results}, {"passed", failed == 0}}.dump() << "\n";
      break;
    }
    case OutputFormat::csv:
      out << "family,case,passed,detail\n";
      for (const auto& r : records) {
        out << r.family << "," << csv_escape(r.label) << "," << (r.passed ? "true" : "false") << "," << csv_escape(r.detail)
            << "\n";
      }
      break;
    case OutputFormat::text:
      for (const auto& r : records) {
        out << (r.passed ? "PASS " : "FAIL ") << r.family << "  " << r.label;
        if (!r.detail.empty()) out << "  [" << r.detail << "]";
        out << "\n";
      }
      out << "verify " << family << ": " << records.size() - static_cast<std::size_t>(failed) << " passed, " << failed
          << " failed\n";
      break;
  }
  return failed == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact hook-length, content and shifted-part partition sums", "hooklab"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  const std::map<std::string, OutputFormat> formats{
      {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};
  app.add_option("--format", cfg.format, "Output format: text, json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", cfg.seed, "Seed for the random rational harnesses");

  int partitions_n = 0;
  auto* partitions = app.add_subcommand("partitions", "List the partitions of N in reverse lexicographic order");
  partitions->add_option("N", partitions_n)->required();

  std::string expr, alphabets;
  int value_n = 0;
  auto* value = app.add_subcommand("value", "Evaluate (1/n!) sum f^2 EXPR over the partitions of n");
  value->add_option("EXPR", expr, "e.g. \"e[2,1](x)*p[3](y)\"")->required();
  value->add_option("--alphabets", alphabets, "e.g. x=contents,y=shifted_parts")->required();
  value->add_option("--n", value_n, "Partition size")->required();

  std::optional<int> degree_hint;
  auto* fit = app.add_subcommand("fit", "Fit the weighted sum as a polynomial in n");
  fit->add_option("EXPR", expr)->required();
  fit->add_option("--alphabets", alphabets)->required();
  fit->add_option("--degree-hint", degree_hint, "Starting degree for the fit");

  std::string table_name;
  auto* tables = app.add_subcommand("tables", "Reproduce the N_mu or Phi_n(e_mu) tables");
  tables->add_option("TABLE", table_name, "nmu or phimu")->required()->check(CLI::IsMember({"nmu", "phimu"}));

  std::string family;
  std::vector<std::string> family_names{"all"};
  for (const auto& f : verify_families()) family_names.emplace_back(f.name);
  auto* verify = app.add_subcommand("verify", "Run a verification family");
  verify->add_option("FAMILY", family)->required()->check(CLI::IsMember(family_names));
  verify->add_option("--max-n", cfg.max_n, "Largest n checked (bounded by each family's guard)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*partitions) return cmd_partitions(cfg, partitions_n, out);
    if (*value) return cmd_value(cfg, expr, alphabets, value_n, out);
    if (*fit) return cmd_fit(cfg, expr, alphabets, degree_hint, out, err);
    if (*tables) return cmd_tables(cfg, table_name, out, err);
    if (*verify) return cmd_verify(cfg, family, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hooklab::cli
