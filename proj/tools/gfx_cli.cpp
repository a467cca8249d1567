// Copyright 2026 The gfx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gfx/gfx.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Owned {
  char* p = nullptr;
  ~Owned() { gfx_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

int exit_code_for(gfx_status s) {
  switch (s) {
    case GFX_OK: return kExitOk;
    case GFX_VERIFICATION_FAILED: return kExitViolation;
    case GFX_BUDGET_EXCEEDED:
    case GFX_NOT_EXHAUSTIVE: return kExitBudget;
    default: return kExitUsage;
  }
}

int report_failure(gfx_status s) {
  std::cerr << "error: " << gfx_status_string(s) << ": " << gfx_last_error() << "\n";
  return exit_code_for(s);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!out) throw UsageError("cannot write " + path);
}

// Inline JSON when the text starts like JSON, otherwise a file path.
json json_arg(const std::string& text, const char* flag) {
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool inline_json = first != std::string::npos && (text[first] == '{' || text[first] == '[');
  const std::string body = inline_json ? text : read_file(text);
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("bad JSON for ") + flag + ": " + e.what());
  }
}

std::optional<std::uint64_t> env_u64(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v, &end, 10);
  if (*end != '\0' || x == 0) throw UsageError(std::string(name) + " must be a positive integer");
  return x;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-")
    std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
  else
    write_file(out_path, !text.empty() && text.back() == '\n' ? text : text + "\n");
}

std::string sidecar_path(const std::string& matrix_path) {
  const std::string ext = ".json";
  if (matrix_path.size() > ext.size() && matrix_path.compare(matrix_path.size() - ext.size(), ext.size(), ext) == 0)
    return matrix_path.substr(0, matrix_path.size() - ext.size()) + ".report.json";
  return matrix_path + ".report.json";
}

// Options shared by several subcommands.
struct Common {
  std::optional<int> q, r, k;
  std::string lists, kappa, downset, labels;
  bool close = false;
  unsigned threads = 1;
  std::optional<std::uint64_t> subspace_budget, member_budget;
  std::string out;

  void add_field(CLI::App* c) { c->add_option("--q", q, "Field order q = p^e <= 256"); }
  void add_rk(CLI::App* c) {
    c->add_option("--r", r, "Rank bound r")->check(CLI::NonNegativeNumber);
    c->add_option("--k", k, "Weight or co-weight k")->check(CLI::NonNegativeNumber);
  }
  void add_labels(CLI::App* c) {
    c->add_option("--lists", lists, "Label lists, JSON array of arrays (inline or file)");
    c->add_option("--kappa", kappa, "Weight profile, JSON array (inline or file)");
    c->add_option("--downset", downset, "Down-set of profiles, JSON array of arrays (inline or file)");
    c->add_option("--labels", labels, "JSON object with any of lists/kappa/downset (inline or file)");
    c->add_flag("--close", close, "Replace --downset by its down-closure");
  }
  void add_run(CLI::App* c) {
    c->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    c->add_option("--subspace-budget", subspace_budget, "Max subspaces per scan (env GFX_SUBSPACE_BUDGET)")
        ->check(CLI::PositiveNumber);
    c->add_option("--member-budget", member_budget, "Max members per subspace (env GFX_MEMBER_BUDGET)")
        ->check(CLI::PositiveNumber);
  }
  void add_out(CLI::App* c, const char* help) { c->add_option("-o,--output", out, help); }

  json request() const {
    json req = json::object();
    if (!labels.empty()) {
      req = json_arg(labels, "--labels");
      if (!req.is_object()) throw UsageError("--labels must be a JSON object");
    }
    if (q) req["q"] = *q;
    if (r) req["r"] = *r;
    if (k) req["k"] = *k;
    if (!lists.empty()) req["lists"] = json_arg(lists, "--lists");
    if (!kappa.empty()) req["kappa"] = json_arg(kappa, "--kappa");
    if (!downset.empty()) req["downset"] = json_arg(downset, "--downset");
    if (close) req["close"] = true;
    req["threads"] = threads;
    json budget = json::object();
    if (auto v = subspace_budget ? subspace_budget : env_u64("GFX_SUBSPACE_BUDGET")) budget["subspaces"] = *v;
    if (auto v = member_budget ? member_budget : env_u64("GFX_MEMBER_BUDGET")) budget["members"] = *v;
    if (!budget.empty()) req["budget"] = budget;
    return req;
  }
};

std::vector<std::size_t> parse_list(const std::string& text, const char* flag) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    try {
      if (dash != std::string::npos && dash > 0) {
        const auto lo = std::stoul(item.substr(0, dash)), hi = std::stoul(item.substr(dash + 1));
        for (auto v = lo; v <= hi; ++v) out.push_back(v);
      } else {
        std::size_t used = 0;
        out.push_back(std::stoul(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      }
    } catch (const std::exception&) {
      throw UsageError(std::string("bad list for ") + flag + ": \"" + text + "\"");
    }
  }
  if (out.empty()) throw UsageError(std::string("empty list for ") + flag);
  return out;
}

int cmd_formula(const Common& c, const std::string& kind, std::optional<int> i, std::optional<int> n,
                std::optional<int> beta, const std::string& mode) {
  json req = c.request();
  req.erase("threads");
  req["kind"] = kind;
  if (i) req["i"] = *i;
  if (n) req["n"] = *n;
  if (beta) req["beta"] = *beta;
  if (!mode.empty()) req["mode"] = mode;
  Owned out;
  const gfx_status s = gfx_formula(req.dump().c_str(), &out.p);
  if (s != GFX_OK) return report_failure(s);
  emit(json::parse(out.str()).dump(2), c.out);
  return kExitOk;
}

int cmd_construct(const Common& c, const std::string& kind) {
  json req = c.request();
  req.erase("threads");
  req["kind"] = kind;
  gfx_matrix* raw = nullptr;
  Owned report;
  const gfx_status s = gfx_construct(req.dump().c_str(), &raw, &report.p);
  if (s != GFX_OK) return report_failure(s);
  std::unique_ptr<gfx_matrix, void (*)(gfx_matrix*)> m(raw, gfx_matrix_destroy);
  Owned mj;
  if (const gfx_status t = gfx_matrix_to_json(m.get(), &mj.p); t != GFX_OK) return report_failure(t);
  const json rep = json::parse(report.str());
  const std::string path = c.out.empty() ? "m.json" : c.out;
  write_file(path, json::parse(mj.str()).dump() + "\n");
  write_file(sidecar_path(path), rep.dump(2) + "\n");
  std::cout << rep.dump(2) << "\n";
  if (!rep.at("verified").get<bool>()) {
    std::cerr << "error: construction does not meet its claims\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_oracle(const Common& c, const std::string& mode, const std::string& n_list, std::size_t witness_limit,
               std::size_t max_witnesses, bool no_prune, bool skip_over_budget, const std::string& format,
               const std::string& r_values, const std::string& k_values) {
  json req = c.request();
  req["mode"] = mode;
  req["witness_limit"] = witness_limit;
  req["max_witnesses"] = max_witnesses;
  req["prune"] = !no_prune;
  req["skip_over_budget"] = skip_over_budget;
  if (!n_list.empty()) req["n_list"] = parse_list(n_list, "--n");
  const bool sweep = format == "csv" || !r_values.empty();
  Owned out;
  if (sweep) {
    if (r_values.empty() && !c.r) throw UsageError("CSV sweep needs --r-values or --r");
    req["r_values"] = r_values.empty() ? std::vector<std::size_t>{static_cast<std::size_t>(*c.r)}
                                       : parse_list(r_values, "--r-values");
    if (!k_values.empty())
      req["k_values"] = parse_list(k_values, "--k-values");
    else if (c.k)
      req["k_values"] = std::vector<int>{*c.k};
    const gfx_status s = gfx_oracle_sweep(req.dump().c_str(), &out.p);
    if (s != GFX_OK) return report_failure(s);
    emit(out.str(), c.out);
    return kExitOk;
  }
  if (!c.r) throw UsageError("--r is required");
  const gfx_status s = gfx_oracle(req.dump().c_str(), &out.p);
  if (s != GFX_OK) return report_failure(s);
  emit(json::parse(out.str()).dump(2), c.out);
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  std::optional<int> max_n, max_r, samples;
  std::optional<std::uint64_t> seed;
  std::string matrix, report, r_values;
  bool all_checks = false;
};

int cmd_verify(const Common& c, const VerifyArgs& v) {
  json req = c.request();
  req["suite"] = v.suite;
  if (v.max_n) req["max_n"] = *v.max_n;
  if (v.max_r) req["max_r"] = *v.max_r;
  if (v.samples) req["samples"] = *v.samples;
  if (v.seed) req["seed"] = *v.seed;
  if (!v.r_values.empty()) req["r_values"] = parse_list(v.r_values, "--r-values");
  if (v.all_checks) req["all_checks"] = true;
  if (v.suite == "certify") {
    if (v.matrix.empty()) throw UsageError("--suite certify needs --matrix");
    req["matrix"] = json_arg(v.matrix, "--matrix");
    req["report"] = json_arg(v.report.empty() ? sidecar_path(v.matrix) : v.report, "--report");
  }
  Owned out;
  const gfx_status s = gfx_verify(req.dump().c_str(), &out.p);
  if (s != GFX_OK && s != GFX_VERIFICATION_FAILED) return report_failure(s);
  emit(json::parse(out.str()).dump(2), c.out);
  if (s == GFX_VERIFICATION_FAILED) {
    std::cerr << "error: " << gfx_last_error() << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_tables(const Common& c, std::optional<int> max_r, const std::string& suites) {
  json req = c.request();
  if (max_r) req["max_r"] = *max_r;
  if (!suites.empty()) {
    std::vector<std::string> names;
    std::stringstream ss(suites);
    for (std::string s; std::getline(ss, s, ',');) names.push_back(s);
    req["suites"] = names;
  }
  Owned out;
  const gfx_status s = gfx_tables(req.dump().c_str(), &out.p);
  if (s != GFX_OK) return report_failure(s);
  emit(out.str(), c.out);
  return out.str().find(",FAIL\n") == std::string::npos ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal rank-bounded column families over finite fields"};
  app.set_version_flag("--version", std::string(gfx_version()));
  app.require_subcommand(1);

  Common c;

  auto* formula = app.add_subcommand("formula", "Evaluate a closed-form count");
  std::string f_kind, f_mode;
  std::optional<int> f_i, f_n, f_beta;
  formula->add_option("--kind", f_kind, "ex|coex|labeled|aex|downset|bound|orthogonal|spacecount|hamming|multinomial")
      ->required()
      ->check(CLI::IsMember(
          {"ex", "coex", "labeled", "aex", "downset", "bound", "orthogonal", "spacecount", "hamming", "multinomial"}));
  formula->add_option("--i", f_i, "Weight of v (spacecount)");
  formula->add_option("--n", f_n, "Length (orthogonal)");
  formula->add_option("--beta", f_beta, "Right-hand side, 0 or nonzero (orthogonal)");
  formula->add_option("--mode", f_mode, "weight|coweight (bound)");
  c.add_field(formula);
  c.add_rk(formula);
  c.add_labels(formula);
  c.add_out(formula, "Output path (default stdout)");

  auto* construct = app.add_subcommand("construct", "Build and certify an extremal family");
  std::string c_kind;
  construct->add_option("--kind", c_kind, "weight|coweight|labeled|affine|dual-hamming")
      ->required()
      ->check(CLI::IsMember({"weight", "coweight", "labeled", "affine", "dual-hamming"}));
  c.add_field(construct);
  c.add_rk(construct);
  c.add_labels(construct);
  c.add_run(construct);
  c.add_out(construct, "Matrix path (default m.json); the report goes to <stem>.report.json");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive subspace-scan maximum");
  std::string o_mode, o_n, o_format = "json", o_rv, o_kv;
  std::size_t o_wlimit = 10000, o_maxw = 10;
  bool o_noprune = false, o_skip = false;
  oracle->add_option("--mode", o_mode, "weight|coweight|labeled|downset|affine")
      ->required()
      ->check(CLI::IsMember({"weight", "coweight", "labeled", "downset", "affine"}));
  oracle->add_option("--n", o_n, "Ambient lengths, e.g. 3,4,5 or 3-5");
  oracle->add_option("--witness-limit", o_wlimit, "Witnesses kept in memory");
  oracle->add_option("--max-witnesses", o_maxw, "Witnesses written to the output");
  oracle->add_flag("--no-prune", o_noprune, "Disable pivot-profile pruning");
  oracle->add_flag("--skip-over-budget", o_skip, "Skip over-budget lengths instead of failing");
  oracle->add_option("--format", o_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  oracle->add_option("--r-values", o_rv, "CSV sweep over r, e.g. 2-4");
  oracle->add_option("--k-values", o_kv, "CSV sweep over k, e.g. 0-3");
  c.add_field(oracle);
  c.add_rk(oracle);
  c.add_labels(oracle);
  c.add_run(oracle);
  c.add_out(oracle, "Output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  VerifyArgs va;
  verify->add_option("--suite", va.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"field-axioms", "counting-lemmas", "recursion", "formula-vs-oracle", "uniqueness",
                             "constructions", "certify"}));
  verify->add_option("--max-n", va.max_n, "Largest n (counting-lemmas)")->check(CLI::PositiveNumber);
  verify->add_option("--max-r", va.max_r, "Largest r (formula-vs-oracle)")->check(CLI::PositiveNumber);
  verify->add_option("--samples", va.samples, "Random vectors per cell")->check(CLI::PositiveNumber);
  verify->add_option("--seed", va.seed, "Seed for random vectors");
  verify->add_option("--r-values", va.r_values, "r values (recursion)");
  verify->add_option("--matrix", va.matrix, "Matrix file (certify)");
  verify->add_option("--report", va.report, "Report file (certify; default <stem>.report.json)");
  verify->add_flag("--all-checks", va.all_checks, "List passing checks too");
  c.add_field(verify);
  c.add_rk(verify);
  c.add_labels(verify);
  c.add_run(verify);
  c.add_out(verify, "Output path (default stdout)");

  auto* tables = app.add_subcommand("tables", "Emit the acceptance grid as CSV");
  std::optional<int> t_maxr;
  std::string t_suites;
  tables->add_option("--max-r", t_maxr, "Largest r for oracle rows")->check(CLI::PositiveNumber);
  tables->add_option("--suites", t_suites, "Comma-separated suite subset");
  c.add_field(tables);
  c.add_run(tables);
  c.add_out(tables, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*formula) return cmd_formula(c, f_kind, f_i, f_n, f_beta, f_mode);
    if (*construct) return cmd_construct(c, c_kind);
    if (*oracle) return cmd_oracle(c, o_mode, o_n, o_wlimit, o_maxw, o_noprune, o_skip, o_format, o_rv, o_kv);
    if (*verify) return cmd_verify(c, va);
    if (*tables) return cmd_tables(c, t_maxr, t_suites);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
