#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isolation/graph.hpp"

namespace isolation {

enum class ExtremalClass { PureSpecial, C5_k2, C4_k3_l1or3, NotExtremal, Violation };

/// "PureSpecial", "C5_k2", "C4_k3_l1or3", "NotExtremal", "VIOLATION".
std::string_view extremal_class_name(ExtremalClass c);

struct VerificationRecord {
  std::string graph6;
  std::size_t n = 0;
  std::size_t m = 0;
  int k = 1;
  int l = 1;
  std::size_t iota = 0;
  std::size_t bound = 0;
  bool is_k_clique = false;
  bool equality = false;
  ExtremalClass extremal_class = ExtremalClass::NotExtremal;
  std::optional<std::size_t> constructed;  // absent for k-cliques
  bool certified = true;                   // iota is an exact minimum
  std::optional<double> seconds;           // only with timing enabled
};

struct CorpusSource {
  enum class Kind { Builtin, Graph6File };
  Kind kind = Kind::Builtin;
  std::size_t max_n = 7;
  std::string path;

  static CorpusSource builtin(std::size_t max_n);
  static CorpusSource file(std::string path);
};

/// Connected graphs of a source. Disconnected file entries are dropped and
/// counted.
struct Corpus {
  std::vector<Graph> graphs;
  std::size_t skipped_disconnected = 0;
};

/// Throws std::out_of_range for builtin max_n outside 1..8, and ParseError
/// (with file and line) or std::ios_base::failure for bad files.
Corpus load_corpus(const CorpusSource& source);

struct VerifyOptions {
  int k_min = 1;
  int k_max = 5;
  std::vector<int> ls{1, 2, 3};
  std::size_t threads = 1;
  bool timing = false;
  bool run_constructor = true;
  std::uint64_t node_budget = 10'000'000;
};

struct ReportSummary {
  std::size_t records = 0;
  std::size_t k_clique_records = 0;
  std::size_t equalities = 0;
  std::size_t pure_special = 0;
  std::size_t c5_k2 = 0;
  std::size_t c4_k3 = 0;
  std::size_t violations = 0;
  std::size_t uncertified = 0;
  std::size_t skipped_disconnected = 0;
  std::optional<double> max_seconds;
};

struct VerificationReport {
  std::vector<VerificationRecord> records;  // sorted by (graph6, k, l)
  std::size_t skipped_disconnected = 0;

  ReportSummary summary() const;
};

/// Extremal class of an (iota, bound) pair for a connected non-K_k graph.
/// Equality must land in a class and every class member must attain the
/// bound; anything else is a violation.
ExtremalClass classify(const Graph& g, int k, int l, std::size_t iota, std::size_t bound);

/// Exact iota and the constructor's set size for every graph and (k, l).
VerificationReport verify_theorem(const Corpus& corpus, const VerifyOptions& options);

/// Keeps equality records, plus any violation.
VerificationReport equality_records(const VerificationReport& report);

enum class ReportFormat { JsonLines, Csv };

/// JSON Lines ends with a {"summary": ...} line; CSV has a header row and
/// "#"-prefixed summary lines.
void write_report(std::ostream& out, const VerificationReport& report, ReportFormat format);

/// The edge bound specialised to cycles (t_3 = 5) on non-triangle graphs.
struct CycleRecord {
  std::string graph6;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t iota_cycles = 0;
  std::size_t iota_min_regular3 = 0;
  std::size_t bound = 0;
  bool equality = false;
  std::string extremal_class;  // PureSpecial, C4, NotExtremal or VIOLATION
};

struct CycleReport {
  std::vector<CycleRecord> records;
  std::size_t skipped_triangles = 0;
  std::size_t skipped_disconnected = 0;
  std::size_t violations = 0;
};

CycleReport cycle_check(const Corpus& corpus, std::size_t threads = 1);

void write_cycle_report(std::ostream& out, const CycleReport& report, ReportFormat format);

}  // namespace isolation
