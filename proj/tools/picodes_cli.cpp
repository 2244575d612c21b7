// Copyright 2026 The picodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: synthesize, verify, search, table, fidelity.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 synthesis/search failure,
// 3 verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "picodes/codespec_io.hpp"
#include "picodes/oracle.hpp"
#include "picodes/parallel.hpp"
#include "picodes/synthesis.hpp"

namespace {

using namespace picodes;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSynthesis = 2;
constexpr int kExitVerification = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw UsageError("cannot open '" + out_path + "' for writing");
  file << text;
}

std::vector<Partition> parse_subset(const std::string& text) {
  std::vector<Partition> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    out.emplace_back(parse_occupation_key(item));
  }
  return out;
}

std::string search_mode_name(SearchMode mode) { return mode == SearchMode::exact ? "exact" : "inequality"; }

struct SynthesizeArgs {
  int t = 0;
  std::optional<int> w;
  std::optional<int> u;
  std::string subset;
  bool dump = false;
  std::string out;
  std::string format = "json";
};

int run_synthesize(const SynthesizeArgs& args) {
  SynthesisParams params = SynthesisParams::with_defaults(args.t, args.w, args.u);
  try {
    params.q_subset = parse_subset(args.subset);
    params.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  if (args.dump) {
    const DickeBasis basis = build_qu(params);
    std::cout << dump_matrix(build_matrix(params.t, basis));
  }

  const SynthesisResult result = synthesize(params);
  if (const auto* failure = std::get_if<SynthesisFailure>(&result)) {
    emit(to_json(*failure).dump(2) + "\n", args.out);
    return kExitSynthesis;
  }
  const auto& spec = std::get<CodeSpec>(result);
  emit(args.format == "csv" ? to_csv(spec) : to_json(spec).dump(2) + "\n", args.out);
  return kExitOk;
}

struct VerifyArgs {
  std::string file;
  std::vector<double> gammas{0.1};
  std::string scope = "full";
  std::size_t cap = OracleLimits{}.pair_cap;
  double tolerance = 1e-10;
  std::string out;
  std::string format = "json";
};

int run_verify(const VerifyArgs& args) {
  std::ifstream in(args.file);
  if (!in) throw UsageError("cannot read '" + args.file + "'");
  CodeSpec spec;
  try {
    spec = codespec_from_json(Json::parse(in));
  } catch (const std::exception& e) {
    throw UsageError(std::string("cannot parse code spec: ") + e.what());
  }
  const Scope scope = parse_scope(args.scope);
  OracleLimits limits;
  limits.pair_cap = args.cap;

  bool ok = true;
  if (scope == Scope::partition_reduced) {
    // The exact witness: x must lie in the nullspace of the rebuilt matrix.
    const ConstraintMatrix m = build_matrix(spec.params.t, spec.basis);
    const RationalVector residual = matvec(m.a, spec.x);
    for (const auto& entry : residual) {
      if (entry != 0) {
        std::cerr << "exact check failed: A*x != 0\n";
        ok = false;
        break;
      }
    }
  }

  Json reports = Json::array();
  std::string csv = "scope,gamma,pairs_checked,nondeform,offdiag,ortho,nondegenerate,permutation_invariant\n";
  for (double gamma : args.gammas) {
    VerificationReport report;
    try {
      report = kl_verify(spec, gamma, scope, limits);
    } catch (const std::length_error& e) {
      throw UsageError(e.what());
    }
    ok = ok && report.passed(args.tolerance);
    reports.push_back(to_json(report));
    csv += scope_name(report.scope) + "," + format_real(gamma) + "," + std::to_string(report.pairs_checked) + "," +
           format_real(report.max_nondeformation_violation) + "," + format_real(report.max_offdiag_violation) + "," +
           format_real(report.max_ortho_violation) + "," + (report.nondegenerate ? "true" : "false") + "," +
           (report.permutation_invariant ? "true" : "false") + "\n";
  }
  emit(args.format == "csv" ? csv : reports.dump(2) + "\n", args.out);
  return ok ? kExitOk : kExitVerification;
}

struct SearchArgs {
  int t = 0;
  std::string mode = "inequality";
  int w_max = 12;
  std::string out;
};

Json search_json(const SearchResult& result) {
  Json out;
  out["mode"] = search_mode_name(result.mode);
  out["t"] = result.t;
  out["w"] = result.w;
  out["u"] = result.u;
  out["N"] = result.N;
  if (result.certificate) out["certificate"] = to_json(*result.certificate);
  return out;
}

SearchMode parse_mode(const std::string& name) {
  if (name == "exact") return SearchMode::exact;
  if (name == "inequality") return SearchMode::inequality;
  throw UsageError("unknown search mode '" + name + "'");
}

int run_search(const SearchArgs& args) {
  try {
    const SearchResult result = search_min_excitation(args.t, parse_mode(args.mode), args.w_max);
    emit(search_json(result).dump(2) + "\n", args.out);
    return kExitOk;
  } catch (const SearchExhausted& e) {
    Json failure;
    failure["status"] = "failure";
    failure["reason"] = e.what();
    failure["scan_log"] = e.scan_log;
    emit(failure.dump(2) + "\n", args.out);
    return kExitSynthesis;
  }
}

struct TableArgs {
  int t_max = 10;
  std::string mode = "mixed";
  int exact_max = 5;
  int w_max = 12;
  std::string out;
  std::string format = "csv";
};

int run_table(const TableArgs& args) {
  if (args.t_max < 1) throw UsageError("--t-max must be at least 1");
  if (args.mode != "mixed" && args.mode != "exact" && args.mode != "inequality") {
    throw UsageError("unknown table mode '" + args.mode + "'");
  }
  std::string csv = "t,N,(t+1)^2,ratio,mode\n";
  Json rows = Json::array();
  for (int t = 1; t <= args.t_max; ++t) {
    SearchMode mode = SearchMode::inequality;
    if (args.mode == "exact" || (args.mode == "mixed" && t <= args.exact_max)) mode = SearchMode::exact;
    SearchResult result;
    try {
      result = search_min_excitation(t, mode, args.w_max);
    } catch (const SearchExhausted& e) {
      std::cerr << "t=" << t << ": " << e.what() << "\n";
      return kExitSynthesis;
    }
    const int noon = (t + 1) * (t + 1);
    const double ratio = static_cast<double>(result.N) / noon;
    csv += std::to_string(t) + "," + std::to_string(result.N) + "," + std::to_string(noon) + "," +
           format_real(ratio) + "," + search_mode_name(mode) + "\n";
    rows.push_back({{"t", t}, {"N", result.N}, {"noon", noon}, {"ratio", ratio}, {"mode", search_mode_name(mode)}});
  }
  emit(args.format == "json" ? rows.dump(2) + "\n" : csv, args.out);
  return kExitOk;
}

struct FidelityArgs {
  int total = 0;
  int t = 0;
  std::vector<double> gammas;
  std::string out;
};

int run_fidelity(const FidelityArgs& args) {
  std::string csv = "N,t,gamma,bound\n";
  for (double gamma : args.gammas) {
    double bound = 0.0;
    try {
      bound = fidelity_lower_bound(args.total, args.t, gamma);
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
    csv += std::to_string(args.total) + "," + std::to_string(args.t) + "," + format_real(gamma) + "," +
           format_real(bound) + "\n";
  }
  emit(csv, args.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation-invariant constant-excitation codes for amplitude damping"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: PICODES_THREADS or hardware)");

  SynthesizeArgs synth;
  auto* synth_cmd = app.add_subcommand("synthesize", "Build a code from the nullspace of the constraint matrix");
  synth_cmd->add_option("--t", synth.t, "Number of damping errors to correct")->required()->check(CLI::PositiveNumber);
  synth_cmd->add_option("--w", synth.w, "Integer whose partitions label the code (default t)");
  synth_cmd->add_option("--u", synth.u, "Multiplier (default t+1)");
  synth_cmd->add_option("--q", synth.subset, "Subset of P(w), e.g. \"2;1,1\"");
  synth_cmd->add_flag("--dump-matrix", synth.dump, "Print the constraint matrix first");
  synth_cmd->add_option("--out", synth.out, "Output file");
  synth_cmd->add_option("--format", synth.format)->check(CLI::IsMember({"json", "csv"}));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a code spec against the Knill-Laflamme conditions");
  verify_cmd->add_option("file", verify.file, "Code spec JSON")->required();
  verify_cmd->add_option("--gamma", verify.gammas, "Damping strengths")->delimiter(',');
  verify_cmd->add_option("--scope", verify.scope)->check(CLI::IsMember({"full", "partition-reduced", "reduced"}));
  verify_cmd->add_option("--cap", verify.cap, "Full-scope pair cap");
  verify_cmd->add_option("--tol", verify.tolerance, "Violation tolerance");
  verify_cmd->add_option("--out", verify.out, "Output file");
  verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember({"json", "csv"}));

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Smallest total excitation for t errors");
  search_cmd->add_option("--t", search.t)->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--mode", search.mode)->check(CLI::IsMember({"inequality", "exact"}));
  search_cmd->add_option("--w-max", search.w_max);
  search_cmd->add_option("--out", search.out, "Output file");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Code parameters for t = 1..t_max");
  table_cmd->add_option("--t-max", table.t_max);
  table_cmd->add_option("--mode", table.mode)->check(CLI::IsMember({"mixed", "exact", "inequality"}));
  table_cmd->add_option("--exact-max", table.exact_max, "Largest t searched exactly in mixed mode");
  table_cmd->add_option("--w-max", table.w_max);
  table_cmd->add_option("--out", table.out, "Output file");
  table_cmd->add_option("--format", table.format)->check(CLI::IsMember({"json", "csv"}));

  FidelityArgs fidelity;
  auto* fidelity_cmd = app.add_subcommand("fidelity", "Worst-case fidelity lower bound");
  fidelity_cmd->add_option("--N", fidelity.total, "Total excitation")->required();
  fidelity_cmd->add_option("--t", fidelity.t)->required();
  fidelity_cmd->add_option("--gamma", fidelity.gammas)->required()->delimiter(',');
  fidelity_cmd->add_option("--out", fidelity.out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (threads) set_thread_count(threads);

  try {
    if (*synth_cmd) return run_synthesize(synth);
    if (*verify_cmd) return run_verify(verify);
    if (*search_cmd) return run_search(search);
    if (*table_cmd) return run_table(table);
    if (*fidelity_cmd) return run_fidelity(fidelity);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
