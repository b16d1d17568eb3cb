// Command-line front end over the C API in sqdm/sqdm.h.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage error,
// 3 the request does not apply to the partition (e.g. inverse of a
// singular matrix).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "sqdm/sqdm.h"

namespace {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kInapplicable = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Inapplicable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PartitionDeleter {
  void operator()(sqdm_partition* p) const { sqdm_partition_free(p); }
};
struct MatrixDeleter {
  void operator()(sqdm_matrix* m) const { sqdm_matrix_free(m); }
};
struct ReportDeleter {
  void operator()(sqdm_report* r) const { sqdm_report_free(r); }
};
using PartitionPtr = std::unique_ptr<sqdm_partition, PartitionDeleter>;
using MatrixPtr = std::unique_ptr<sqdm_matrix, MatrixDeleter>;
using ReportPtr = std::unique_ptr<sqdm_report, ReportDeleter>;

std::string error_message(sqdm_status status) {
  std::string detail = sqdm_last_error();
  return detail.empty() ? sqdm_status_string(status) : detail;
}

// Maps library failures onto the CLI's exit-code classes.
void check(sqdm_status status) {
  switch (status) {
    case SQDM_OK:
      return;
    case SQDM_ERR_COFACTOR_SUM_ZERO:
    case SQDM_ERR_SINGULAR_DELTA:
    case SQDM_ERR_SINGULAR_MATRIX:
      throw Inapplicable(error_message(status));
    case SQDM_ERR_PARSE:
    case SQDM_ERR_EMPTY_OR_SINGLETON_PARTITION:
    case SQDM_ERR_NON_POSITIVE_PART:
    case SQDM_ERR_INVALID_ARGUMENT:
      throw UsageError(error_message(status));
    default:
      throw std::runtime_error(error_message(status));
  }
}

std::string take_string(char* s) {
  std::string out(s);
  sqdm_string_free(s);
  return out;
}

PartitionPtr parse_partition(const std::string& token) {
  sqdm_partition* raw = nullptr;
  check(sqdm_partition_parse(token.c_str(), &raw));
  return PartitionPtr(raw);
}

std::string sizes_token(const nlohmann::json& partition) {
  std::string out;
  for (const auto& v : partition.at("sizes")) {
    if (!out.empty()) out += ',';
    out += std::to_string(v.get<unsigned>());
  }
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

int run_info(const std::string& token, const std::string& format, std::ostream& out) {
  auto p = parse_partition(token);
  char* raw = nullptr;
  check(sqdm_info_json(p.get(), &raw));
  const auto info = nlohmann::json::parse(take_string(raw));
  if (format == "json") {
    out << info.dump() << '\n';
    return kOk;
  }
  const auto& cls = info.at("classification");
  out << "partition " << sizes_token(info) << '\n'
      << "n=" << info["n"] << " t=" << info["t"] << " h=" << info["h"] << " s=" << info["s"] << '\n'
      << "phi=" << info["phi"].get<std::string>() << " psi=" << info["psi"].get<std::string>()
      << " theta=" << info["theta"].get<std::string>() << '\n'
      << "det=" << info["det"].get<std::string>() << '\n'
      << "cof=" << info["cof"].get<std::string>() << '\n'
      << "lambda=" << (info["lambda"].is_null() ? std::string("undefined") : info["lambda"].get<std::string>())
      << '\n'
      << "det_zero=" << (cls["det_zero"].get<bool>() ? "true" : "false")
      << " cof_zero=" << (cls["cof_zero"].get<bool>() ? "true" : "false")
      << " margin=" << cls["margin"].get<std::string>() << " cof_margin=" << cls["cof_margin"].get<std::string>()
      << '\n';
  return kOk;
}

int run_matrix(const std::string& kind_name, const std::string& token, const std::string& format, std::ostream& out) {
  static const std::map<std::string, sqdm_matrix_kind> kinds = {
      {"delta", SQDM_MATRIX_DELTA},
      {"laplacian", SQDM_MATRIX_LAPLACIAN},
      {"inverse", SQDM_MATRIX_INVERSE_BLOCK},
      {"inverse-block", SQDM_MATRIX_INVERSE_BLOCK},
      {"inverse-rank-one", SQDM_MATRIX_INVERSE_RANK_ONE},
      {"bfs", SQDM_MATRIX_BFS},
  };
  const auto kind = kinds.find(kind_name);
  if (kind == kinds.end()) throw UsageError("unknown matrix kind '" + kind_name + "'");
  auto p = parse_partition(token);
  sqdm_matrix* raw = nullptr;
  check(sqdm_matrix_build(p.get(), kind->second, &raw));
  MatrixPtr m(raw);
  char* text = nullptr;
  if (format == "json") {
    check(sqdm_matrix_json(m.get(), &text));
    out << take_string(text) << '\n';
  } else if (format == "pretty") {
    check(sqdm_matrix_pretty(m.get(), &text));
    out << take_string(text);
  } else {
    check(sqdm_matrix_csv(m.get(), &text));
    out << take_string(text);
  }
  return kOk;
}

void print_report_pretty(const nlohmann::json& report, std::ostream& out, bool verbose) {
  const std::string token = sizes_token(report.at("partition"));
  std::size_t passed = 0;
  for (const auto& c : report.at("checks")) {
    const bool ok = c.at("passed").get<bool>();
    passed += ok;
    if (verbose || !ok) {
      out << (ok ? "PASS " : "FAIL ") << token << ' ' << c.at("name").get<std::string>() << "  "
          << c.at("witness").get<std::string>() << '\n';
    }
  }
  if (verbose) {
    for (const auto& s : report.at("skipped")) {
      out << "SKIP " << token << ' ' << s.at("name").get<std::string>() << "  " << s.at("reason").get<std::string>()
          << '\n';
    }
  }
  out << token << ": " << passed << " passed, " << report.at("failures").get<std::size_t>() << " failed, "
      << report.at("skipped").size() << " skipped\n";
}

int run_verify(const std::string& token, const std::string& format, std::ostream& out) {
  auto p = parse_partition(token);
  sqdm_report* raw = nullptr;
  check(sqdm_verify(p.get(), &raw));
  ReportPtr report(raw);
  char* text = nullptr;
  check(sqdm_report_json(report.get(), &text));
  const std::string line = take_string(text);
  if (format == "json") {
    out << line << '\n';
  } else {
    print_report_pretty(nlohmann::json::parse(line), out, true);
  }
  return sqdm_report_failure_count(report.get()) == 0 ? kOk : kCheckFailed;
}

struct StreamTarget {
  std::ostream* out;
  bool pretty;
};

int emit_line(const char* line, void* user) {
  auto* target = static_cast<StreamTarget*>(user);
  if (!target->pretty) {
    *target->out << line << '\n';
    return 0;
  }
  const auto doc = nlohmann::json::parse(line);
  const auto type = doc.at("type").get<std::string>();
  if (type == "verification") {
    print_report_pretty(doc, *target->out, false);
  } else if (type == "conjecture") {
    const auto& in = doc.at("inertia");
    *target->out << sizes_token(doc.at("partition")) << ": mult(1/4)=" << doc["mult_quarter"]
                 << " mult(1)=" << doc["mult_one"] << " inertia=(" << in[0] << "," << in[1] << "," << in[2]
                 << ") clause_i=" << (doc["conjecture_i_holds"].get<bool>() ? "holds" : "fails")
                 << " clause_ii=" << (doc["conjecture_ii_holds"].get<bool>() ? "holds" : "fails") << '\n';
  } else {
    *target->out << "summary " << doc.dump() << '\n';
  }
  return 0;
}

int run_scan(std::size_t n_max, std::size_t workers, const std::string& format, std::ostream& out) {
  StreamTarget target{&out, format == "pretty"};
  std::size_t failures = 0;
  check(sqdm_scan(n_max, workers, emit_line, &target, &failures));
  return failures == 0 ? kOk : kCheckFailed;
}

int run_conjecture(std::size_t n_max, std::size_t workers, const std::string& format, std::ostream& out) {
  StreamTarget target{&out, format == "pretty"};
  check(sqdm_conjecture_scan(n_max, workers, emit_line, &target, nullptr));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact squared distance matrices of complete multipartite graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sqdm_version());

  std::string output_path;
  app.add_option("-o,--output", output_path, "Write to this file instead of standard output");

  std::string token;
  std::string format;
  std::string kind;
  std::size_t n_max = 0;
  std::size_t workers = 0;

  auto* info = app.add_subcommand("info", "Invariants, det, cof, lambda and classification");
  info->add_option("sizes", token, "Part sizes, e.g. 2,2,1")->required();
  info->add_option("-f,--format", format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));

  auto* matrix = app.add_subcommand("matrix", "Print an exact matrix");
  matrix->add_option("kind", kind, "delta, laplacian, inverse, inverse-block, inverse-rank-one or bfs")->required();
  matrix->add_option("sizes", token, "Part sizes, e.g. 2,2,1")->required();
  matrix->add_option("-f,--format", format, "csv, json or pretty")->check(CLI::IsMember({"csv", "json", "pretty"}));

  auto* verify = app.add_subcommand("verify", "Cross-check every closed form against exact oracles");
  verify->add_option("sizes", token, "Part sizes, e.g. 2,2,1")->required();
  verify->add_option("-f,--format", format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));

  const std::string workers_help = "Worker threads (default: SQDM_WORKERS or hardware concurrency)";
  auto* scan = app.add_subcommand("scan", "Verify every partition up to a vertex count");
  scan->add_option("--max-n", n_max, "Largest vertex count")->required()->check(CLI::Range(2, 64));
  scan->add_option("-w,--workers", workers, workers_help);
  scan->add_option("-f,--format", format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));

  auto* conjecture = app.add_subcommand("conjecture", "Inspect L for every singular partition");
  conjecture->add_option("--max-n", n_max, "Largest vertex count")->required()->check(CLI::Range(2, 64));
  conjecture->add_option("-w,--workers", workers, workers_help);
  conjecture->add_option("-f,--format", format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Output output(output_path);
    std::ostream& out = output.stream();
    if (*info) return run_info(token, format.empty() ? "pretty" : format, out);
    if (*matrix) return run_matrix(kind, token, format.empty() ? "csv" : format, out);
    if (*verify) return run_verify(token, format.empty() ? "pretty" : format, out);
    if (*scan) return run_scan(n_max, workers, format.empty() ? "json" : format, out);
    if (*conjecture) return run_conjecture(n_max, workers, format.empty() ? "json" : format, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Inapplicable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInapplicable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}
