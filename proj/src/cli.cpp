#include "hstarlab/cli.hpp"

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hstarlab/enumerate.hpp"
#include "hstarlab/hstar.hpp"
#include "hstarlab/json_io.hpp"
#include "hstarlab/oracle.hpp"
#include "hstarlab/parallel.hpp"
#include "hstarlab/verify.hpp"

namespace hstarlab {

namespace {

struct HStarArgs {
  int r = 1;
  int k = 0;
  int n = 0;
  std::string method = "all";
  std::string format = "json";
};

struct EnumArgs {
  int k = 0;
  int n = 0;
  int d = 0;
  std::optional<int> r;
  bool hypersimplicial = false;
  std::optional<long> limit;
  std::string format = "json";
};

struct VerifyArgs {
  std::string suite = "all";
  SweepBounds bounds;
  std::string format = "text";
};

HStarVector compute(const std::string& method, const PolytopeSpec& spec) {
  if (method == "formula") return hstar_closed_form(spec);
  if (method == "enum") return hstar_combinatorial(spec);
  return hstar_from_oracle(spec);
}

void write_csv_row(std::ostream& out, const std::string& method, const HStarVector& h) {
  out << method;
  for (const auto& e : h.entries) out << ',' << e.get_str();
  out << '\n';
}

int cmd_hstar(const HStarArgs& args, std::ostream& out, std::ostream& err) {
  const PolytopeSpec spec{args.r, args.k, args.n};
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    err << "error: invalid polytope: " << e.what() << '\n';
    return kExitInvalid;
  }

  std::vector<std::string> methods;
  if (args.method == "all") {
    methods = {"formula", "enum", "oracle"};
  } else {
    methods = {args.method};
  }
  std::vector<HStarVector> results;
  for (const auto& m : methods) results.push_back(compute(m, spec));

  bool agree = true;
  for (const auto& h : results) agree = agree && h.entries == results.front().entries;

  if (args.format == "csv") {
    out << "method";
    for (int d = 0; d < spec.n; ++d) out << ",h" << d;
    out << '\n';
    for (std::size_t i = 0; i < methods.size(); ++i) write_csv_row(out, methods[i], results[i]);
  } else {
    Json report{{"spec", spec_to_json(spec)}, {"method", args.method}, {"hstar", entries_to_json(results.front().entries)}};
    if (args.method == "all") {
      Json by_method = Json::object();
      for (std::size_t i = 0; i < methods.size(); ++i) by_method[methods[i]] = entries_to_json(results[i].entries);
      report["methods"] = by_method;
      report["agree"] = agree;
    }
    out << report.dump() << '\n';
  }
  if (!agree) {
    err << "error: h* methods disagree for (r=" << spec.r << ", k=" << spec.k << ", n=" << spec.n << ")\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

int cmd_enum(const EnumArgs& args, std::ostream& out, std::ostream& err) {
  if (args.k < 1 || args.n < 1 || args.d < 0) {
    err << "error: enum needs --k >= 1, --n >= 1 and --d >= 0\n";
    return kExitInvalid;
  }
  const int r = args.r.value_or(1);
  if (r < 1) {
    err << "error: --r must be at least 1\n";
    return kExitInvalid;
  }
  if (args.limit && *args.limit < 0) {
    err << "error: --limit must be nonnegative\n";
    return kExitInvalid;
  }

  long emitted = 0;
  bool truncated = false;
  for (WindingVectorStream s(args.k, args.n, args.d); !s.done(); s.advance()) {
    const Dosp p = dosp_from_winding_vector(s.current(), args.k);
    if (args.hypersimplicial && !is_r_hypersimplicial(p, r)) continue;
    if (args.limit && emitted >= *args.limit) {
      truncated = true;
      break;
    }
    ++emitted;
    if (args.format == "text") {
      out << format_dosp(p) << '\n';
    } else {
      out << dosp_record(p).dump() << '\n';
    }
  }

  Json summary{{"k", args.k}, {"n", args.n}, {"d", args.d}};
  summary["r"] = args.hypersimplicial ? Json(r) : Json(nullptr);
  summary["hypersimplicial"] = args.hypersimplicial;
  summary["count"] = emitted;
  summary["truncated"] = truncated;
  if (args.format == "text") {
    out << "# " << emitted << " records" << (truncated ? " (truncated)" : "") << '\n';
  } else {
    out << Json{{"summary", summary}}.dump() << '\n';
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  for (const auto* cap : {&args.bounds.max_n, &args.bounds.max_k, &args.bounds.max_r}) {
    if (*cap && **cap < 1) {
      err << "error: sweep caps must be positive\n";
      return kExitInvalid;
    }
  }
  std::vector<std::string> suites;
  if (args.suite == "all") {
    suites = suite_names();
  } else {
    suites = {args.suite};
  }

  int passed = 0;
  int failed = 0;
  for (const auto& suite : suites) {
    for (const auto& report : run_suite(suite, args.bounds)) {
      (report.passed ? passed : failed) += 1;
      if (args.format == "json") {
        Json line{{"suite", report.suite},
                  {"identity", report.identity},
                  {"passed", report.passed},
                  {"cases", report.cases},
                  {"counterexample", report.passed ? Json(nullptr) : Json(report.counterexample)}};
        out << line.dump() << '\n';
      } else {
        out << (report.passed ? "PASS " : "FAIL ") << report.suite << ": " << report.identity << " [" << report.cases
            << " cases]";
        if (!report.passed) out << " counterexample: " << report.counterexample;
        out << '\n';
      }
    }
  }
  if (args.format == "json") {
    out << Json{{"summary", {{"passed", passed}, {"failed", failed}}}}.dump() << '\n';
  } else {
    out << passed << "/" << (passed + failed) << " identities passed\n";
  }
  return failed == 0 ? kExitOk : kExitInvalid;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  if (const char* env = std::getenv(std::string(kThreadsEnvVar).c_str())) {
    if (!parse_thread_count(env)) {
      err << "error: " << kThreadsEnvVar << " must be a positive integer, got '" << env << "'\n";
      return kExitInvalid;
    }
  }

  CLI::App app{"Ehrhart h*-vectors of hypersimplices and hypercube cross-sections", "hstar_lab"};
  app.require_subcommand(1);

  HStarArgs hstar_args;
  auto* hstar = app.add_subcommand("hstar", "compute the h*-vector of I^n_{r,k}");
  hstar->add_option("--r", hstar_args.r, "coordinate cap r (1 = hypersimplex)");
  hstar->add_option("--k", hstar_args.k, "slice level k")->required();
  hstar->add_option("--n", hstar_args.n, "ambient dimension n")->required();
  hstar->add_option("--method", hstar_args.method, "formula | enum | oracle | all")
      ->check(CLI::IsMember({"formula", "enum", "oracle", "all"}));
  hstar->add_option("--format", hstar_args.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  EnumArgs enum_args;
  auto* enumerate = app.add_subcommand("enum", "stream dosps of type (k,n) with winding number d");
  enumerate->add_option("--k", enum_args.k, "circumference k")->required();
  enumerate->add_option("--n", enum_args.n, "number of elements n")->required();
  enumerate->add_option("--d", enum_args.d, "winding number d")->required();
  enumerate->add_option("--r", enum_args.r, "cap r for --hypersimplicial (default 1)");
  enumerate->add_flag("--hypersimplicial", enum_args.hypersimplicial, "keep only r-hypersimplicial dosps");
  enumerate->add_option("--limit", enum_args.limit, "stop after this many records");
  enumerate->add_option("--format", enum_args.format, "json | text")->check(CLI::IsMember({"json", "text"}));

  VerifyArgs verify_args;
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  auto* verify = app.add_subcommand("verify", "run exhaustive identity sweeps");
  verify->add_option("--suite", verify_args.suite, "suite name or all")->check(CLI::IsMember(suite_choices));
  verify->add_option("--max-n", verify_args.bounds.max_n, "cap on n");
  verify->add_option("--max-k", verify_args.bounds.max_k, "cap on k (or on a for coefficient identities)");
  verify->add_option("--max-r", verify_args.bounds.max_r, "cap on r");
  verify->add_option("--seed", verify_args.bounds.seed, "seed for randomized round trips");
  verify->add_option("--format", verify_args.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }

  try {
    if (*hstar) return cmd_hstar(hstar_args, out, err);
    if (*enumerate) return cmd_enum(enum_args, out, err);
    return cmd_verify(verify_args, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace hstarlab
