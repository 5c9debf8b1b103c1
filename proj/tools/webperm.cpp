// Command-line front end: permutation dumps, number tables and verification
// suites. Exit status: 0 ok, 1 a check failed, 2 bad usage or cap exceeded.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "webperm/chord.hpp"
#include "webperm/errors.hpp"
#include "webperm/eulerian.hpp"
#include "webperm/grid.hpp"
#include "webperm/permutation.hpp"
#include "webperm/sequences.hpp"
#include "webperm/verify.hpp"

namespace {

using namespace webperm;
using json = nlohmann::ordered_json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
// Tables that only run recurrences, not enumerations.
constexpr int kMaxRecurrenceRows = 200;

struct Caps {
  int max_n = 8;
  int max_chords = 6;
  bool unsafe = false;

  void size(int n, const char* what) const {
    require(n >= 0, std::string(what) + ": size must be nonnegative");
    if (!unsafe) check_cap(max_n, kHardMaxN, "--max-n");
    check_cap(n, max_n, what);
  }
  void chords(int m, const char* what) const {
    if (!unsafe) check_cap(max_chords, kHardMaxChords, "--max-chords");
    check_cap(m, max_chords, what);
  }
};

void add_cap_flags(CLI::App* cmd, Caps& caps) {
  cmd->add_option("--max-n", caps.max_n, "Largest permutation size to enumerate")
      ->capture_default_str();
  cmd->add_option("--max-chords", caps.max_chords, "Largest chord diagram to expand")
      ->capture_default_str();
  cmd->add_flag("--unsafe-no-cap", caps.unsafe, "Lift the hard limits on the caps");
}

// ------------------------------------------------------------- enumerate

std::vector<Permutation> collect(const std::string& kind, int n, int cap) {
  if (kind == "web") return web_from(Permutation::identity(n), cap);
  if (kind == "tilde-web") return tilde_web(n, cap);
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) {
    const bool keep = kind == "delta"    ? is_cycle_up_down(p)
                      : kind == "andre"  ? is_andre(p.word())
                                         : is_up_down(p.word());
    if (keep) out.push_back(p);
  }, cap);
  return out;
}

void cmd_enumerate(const std::string& kind, int n, const std::string& format, const Caps& caps) {
  caps.size(n, "enumerate");
  const auto perms = collect(kind, n, caps.max_n);
  if (format == "json") {
    json j = json::array();
    for (const auto& p : perms) j.push_back(p.word());
    std::cout << j.dump() << "\n";
    return;
  }
  for (const auto& p : perms) std::cout << p.to_string() << "\n";
}

// ----------------------------------------------------------------- table

struct Cell {
  int row;
  int col;
  std::string value;
};

std::string big(const BigInt& v) { return v.str(); }

std::string poly(const MultiPoly& p, bool at_one) {
  return at_one ? p.at_t_alpha_one().to_string() : p.to_string();
}

std::vector<Cell> build_table(const std::string& kind, int n, bool at_one, const Caps& caps) {
  std::vector<Cell> cells;
  if (kind == "seidel") {
    check_cap(n, kMaxRecurrenceRows, "table seidel");
    const SeidelTriangle s(std::max(n, 1));
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= SeidelTriangle::row_length(i); ++j) cells.push_back({i, j, big(s.at(i, j))});
    }
  } else if (kind == "entringer") {
    check_cap(n, kMaxRecurrenceRows, "table entringer");
    const auto rows = entringer_rows(n);
    for (int i = 0; i <= n; ++i) {
      for (int k = 0; k <= i; ++k) {
        cells.push_back({i, k, big(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])});
      }
    }
  } else if (kind == "f") {
    caps.size(n, "table f");
    for (int i = 1; i <= n; ++i) {
      const auto row = f_row(i, caps.max_n);
      for (int k = 1; k <= i; ++k) cells.push_back({i, k, std::to_string(row[static_cast<std::size_t>(k)])});
    }
  } else if (kind == "b-plus") {
    // Row n has the n-crossing plus one chord.
    caps.chords(n + 1, "table b-plus");
    for (int i = 0; i <= n; ++i) {
      for (int k = 0; k <= i; ++k) cells.push_back({i, k, big(b_plus(i, k, caps.max_chords))});
    }
  } else if (kind == "gamma") {
    caps.size(n, "table gamma");
    for (int i = 1; i <= n; ++i) {
      const auto row = gamma_expand(at_eulerian(i, caps.max_n), i);
      for (std::size_t k = 0; k < row.size(); ++k) cells.push_back({i, static_cast<int>(k), poly(row[k], at_one)});
    }
  } else {
    // d_{n,i} sums over permutations of [n-1].
    caps.size(std::max(n - 1, 0), "table d");
    for (int i = 1; i <= n; ++i) {
      const auto row = d_web_row(i, caps.max_n);
      for (std::size_t k = 0; k < row.size(); ++k) cells.push_back({i, static_cast<int>(k), poly(row[k], at_one)});
    }
  }
  return cells;
}

void cmd_table(const std::string& kind, int n, const std::string& format, bool at_one,
               const Caps& caps) {
  require(n >= 0, "table: bound must be nonnegative");
  const auto cells = build_table(kind, n, at_one, caps);
  if (format == "json") {
    json rows = json::array();
    for (const auto& c : cells) {
      if (rows.empty() || rows.back()["row"] != c.row) rows.push_back({{"row", c.row}, {"values", json::array()}});
      rows.back()["values"].push_back(c.value);
    }
    std::cout << json{{"table", kind}, {"rows", rows}}.dump(2) << "\n";
    return;
  }
  std::cout << "row,col,value\n";
  for (const auto& c : cells) std::cout << c.row << "," << c.col << "," << c.value << "\n";
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& suite, SuiteParams params, bool timing) {
  const SuiteReport report = run_suite(suite, params);
  std::cout << report.to_json(timing) << "\n";
  if (!report.passed()) {
    for (const auto& c : report.checks) {
      if (!c.passed) std::cerr << "FAIL " << c.id << ": " << c.witness.value_or("") << "\n";
    }
    return kExitFailure;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Web permutations: enumeration, tables and verification suites"};
  app.require_subcommand(1);

  Caps caps;
  std::string kind;
  std::string list_format;
  std::string table_format;
  int n = 0;

  auto* enumerate = app.add_subcommand("enumerate", "List a set of permutations of [n]");
  enumerate->add_option("kind", kind, "web | tilde-web | delta | andre | updown")
      ->required()
      ->check(CLI::IsMember({"web", "tilde-web", "delta", "andre", "updown"}));
  enumerate->add_option("n", n, "Permutation size")->required();
  enumerate->add_option("--format", list_format, "text | json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));
  add_cap_flags(enumerate, caps);

  bool at_one = false;
  auto* table = app.add_subcommand("table", "Print a number table as CSV or JSON");
  table->add_option("kind", kind, "seidel | entringer | f | b-plus | gamma | d")
      ->required()
      ->check(CLI::IsMember({"seidel", "entringer", "f", "b-plus", "gamma", "d"}));
  table->add_option("bound", n, "Largest row")->required();
  table->add_option("--format", table_format, "csv | json")
      ->default_val("csv")
      ->check(CLI::IsMember({"csv", "json"}));
  table->add_flag("--at-one", at_one, "Set t = alpha = 1 in gamma and d");
  add_cap_flags(table, caps);

  SuiteParams params;
  bool no_timing = false;
  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-n", params.max_n, "Largest permutation size")->capture_default_str();
  verify->add_option("--max-chords", params.max_chords, "Largest chord diagram")
      ->capture_default_str();
  verify->add_option("--threads", params.threads, "Worker threads")->capture_default_str();
  verify->add_flag("--unsafe-no-cap", params.unsafe_no_cap, "Lift the hard limits on the caps");
  verify->add_flag("--no-timing", no_timing, "Report elapsed_ms as 0 for byte-stable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*enumerate) cmd_enumerate(kind, n, list_format, caps);
    if (*table) cmd_table(kind, n, table_format, at_one, caps);
    if (*verify) return cmd_verify(suite, params, !no_timing);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
  return 0;
}
