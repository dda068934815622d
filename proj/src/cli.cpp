#include "isolation/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "isolation/bounds.hpp"
#include "isolation/construct.hpp"
#include "isolation/graph_io.hpp"
#include "isolation/solver.hpp"
#include "isolation/special.hpp"
#include "isolation/verify.hpp"

namespace isolation {
namespace {

struct CorpusFlags {
  std::size_t max_n = 0;
  std::string corpus;
  std::string format = "jsonl";
  std::string out;
  std::size_t threads = std::max(1U, std::thread::hardware_concurrency());

  void attach(CLI::App* cmd) {
    auto* max = cmd->add_option("--max-n", max_n, "Built-in corpus: all connected graphs up to this order")
                    ->check(CLI::Range(1, 8));
    auto* file = cmd->add_option("--corpus", corpus, "graph6 corpus file");
    max->excludes(file);
    file->excludes(max);
    cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"jsonl", "csv"}));
    cmd->add_option("--out", out, "Report file (default: standard output)");
    cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  }

  CorpusSource source() const { return corpus.empty() ? CorpusSource::builtin(max_n) : CorpusSource::file(corpus); }
  ReportFormat report_format() const { return format == "csv" ? ReportFormat::Csv : ReportFormat::JsonLines; }
};

struct VerifyFlags : CorpusFlags {
  int k_min = 1;
  int k_max = 5;
  std::vector<int> ls{1, 2, 3};
  bool timing = false;
  std::uint64_t budget = SolveOptions{}.node_budget;

  void attach(CLI::App* cmd) {
    CorpusFlags::attach(cmd);
    cmd->add_option("--k-min", k_min)->check(CLI::PositiveNumber);
    cmd->add_option("--k-max", k_max)->check(CLI::PositiveNumber);
    cmd->add_option("--l", ls, "Comma-separated family indices")->delimiter(',')->check(CLI::Range(1, 3));
    cmd->add_flag("--timing", timing, "Record per-record runtime (output is then not reproducible)");
    cmd->add_option("--budget", budget, "Solver node budget per record");
  }

  VerifyOptions options() const {
    VerifyOptions o;
    o.k_min = k_min;
    o.k_max = k_max;
    o.ls = ls;
    o.threads = threads;
    o.timing = timing;
    o.node_budget = budget;
    return o;
  }
};

// Writes to --out when given, otherwise to `fallback`.
template <typename WriteFn>
void emit(const std::string& path, std::ostream& fallback, WriteFn write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::ios_base::failure("cannot write " + path);
  write(file);
  if (!file) throw std::ios_base::failure("error writing " + path);
}

int cmd_solve(const std::string& graph_arg, const std::string& family_word, int k, std::uint64_t budget,
              std::ostream& out) {
  const Graph g = read_graph_argument(graph_arg);
  const FamilyKind kind = *parse_family_keyword(family_word);
  FamilySpec family = kind == FamilyKind::Cycles ? FamilySpec::cycles() : FamilySpec{kind, k};
  const auto result = isolation_number(g, family, SolveOptions{budget});
  out << "family=" << family.name() << "\niota=" << result.size << "\nset=" << result.set.to_string()
      << "\ncertification=" << certification_name(result.certified) << '\n';
  if (kind != FamilyKind::Cycles && g.order() == static_cast<std::size_t>(k) && is_complete(g))
    out << "note=graph is K_" << k << "; the edge bound does not apply\n";
  return kExitOk;
}

int cmd_construct(const std::string& graph_arg, int k, int l, bool trace, std::ostream& out) {
  const Graph g = read_graph_argument(graph_arg);
  const auto c = construct_isolating(g, k, l);
  out << "set=" << c.set.to_string() << "\nsize=" << c.set.size() << "\nbound=" << bound_value(g.size(), k)
      << "\nrepairs=" << c.trace.repairs(Adjustment::LocalSearch) + c.trace.repairs(Adjustment::ExactSolver) << '\n';
  if (trace) out << c.trace.to_text();
  return kExitOk;
}

int cmd_build_special(std::size_t m, int k, std::uint64_t seed, const std::string& path, std::ostream& out) {
  const auto special = build_special(m, k, seed);
  const std::string g6 = write_graph6(special.graph);
  if (path.empty()) {
    out << g6 << '\n';
  } else {
    emit(path, out, [&](std::ostream& s) { s << g6 << '\n'; });
  }
  out << describe(special.descriptor);
  return kExitOk;
}

int cmd_verify(const VerifyFlags& flags, bool extremal_only, std::ostream& out) {
  if (flags.k_min > flags.k_max) throw CLI::ValidationError("--k-min", "must not exceed --k-max");
  const Corpus corpus = load_corpus(flags.source());
  VerificationReport report = verify_theorem(corpus, flags.options());
  const ReportSummary summary = report.summary();
  if (extremal_only) report = equality_records(report);
  emit(flags.out, out, [&](std::ostream& s) { write_report(s, report, flags.report_format()); });
  if (!flags.out.empty()) {
    out << "records=" << summary.records << " equalities=" << summary.equalities
        << " violations=" << summary.violations << '\n';
  }
  return summary.violations == 0 ? kExitOk : kExitViolation;
}

int cmd_cycle_check(const CorpusFlags& flags, std::ostream& out) {
  const CycleReport report = cycle_check(load_corpus(flags.source()), flags.threads);
  emit(flags.out, out, [&](std::ostream& s) { write_cycle_report(s, report, flags.report_format()); });
  if (!flags.out.empty()) out << "records=" << report.records.size() << " violations=" << report.violations << '\n';
  return report.violations == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isolation numbers, special graphs and edge-bound verification"};
  app.require_subcommand(1);

  std::string graph_arg;
  std::string family_word;
  int k = 3;
  int l = 3;
  bool trace = false;
  std::uint64_t budget = SolveOptions{}.node_budget;

  auto* solve = app.add_subcommand("solve", "Exact isolation number of one graph");
  solve->add_option("--graph", graph_arg, "graph6 string or file")->required();
  solve->add_option("--family", family_word, "clique|minreg|chrom|union|cycles")
      ->required()
      ->check(CLI::IsMember({"clique", "minreg", "chrom", "union", "cycles"}));
  solve->add_option("--k", k)->check(CLI::PositiveNumber);
  solve->add_option("--budget", budget, "Solver node budget");

  auto* construct = app.add_subcommand("construct", "Isolating set within the edge bound, with trace");
  construct->add_option("--graph", graph_arg, "graph6 string or file")->required();
  construct->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  construct->add_option("--l", l)->check(CLI::Range(1, 3));
  construct->add_flag("--trace", trace, "Print the case trace");

  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::string special_out;
  auto* special = app.add_subcommand("build-special", "Build an (m,k)-special graph");
  special->add_option("--m", m)->required();
  special->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  special->add_option("--seed", seed, "Tree seed (0 gives paths)");
  special->add_option("--out", special_out, "Write the graph6 line here");

  VerifyFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "Check the edge bound and its equality cases on a corpus");
  verify_flags.attach(verify);

  VerifyFlags scan_flags;
  auto* scan = app.add_subcommand("scan-extremal", "Like verify, keeping equality records only");
  scan_flags.attach(scan);

  CorpusFlags cycle_flags;
  auto* cycles = app.add_subcommand("cycle-check", "Edge bound for cycle isolation on non-triangle graphs");
  cycle_flags.attach(cycles);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    for (auto* cmd : {verify, scan, cycles}) {
      if (cmd->parsed() && cmd->count("--max-n") == 0 && cmd->count("--corpus") == 0)
        throw CLI::RequiredError("--max-n or --corpus");
    }
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(graph_arg, family_word, k, budget, out);
    if (construct->parsed()) return cmd_construct(graph_arg, k, l, trace, out);
    if (special->parsed()) return cmd_build_special(m, k, seed, special_out, out);
    if (verify->parsed()) return cmd_verify(verify_flags, false, out);
    if (scan->parsed()) return cmd_verify(scan_flags, true, out);
    if (cycles->parsed()) return cmd_cycle_check(cycle_flags, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace isolation
