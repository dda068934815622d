#include "isolation/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "isolation/bounds.hpp"
#include "isolation/canonical.hpp"
#include "isolation/construct.hpp"
#include "isolation/graph_io.hpp"
#include "isolation/solver.hpp"
#include "isolation/special.hpp"

namespace isolation {
namespace {

using Json = nlohmann::ordered_json;

// Runs fn(i) for i in [0, count) on a small pool. The first exception
// thrown by any worker is rethrown after all workers stop.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn fn) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

bool is_k_clique(const Graph& g, int k) { return g.order() == static_cast<std::size_t>(k) && is_complete(g); }

Json record_json(const VerificationRecord& r) {
  Json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["k"] = r.k;
  j["l"] = r.l;
  j["iota"] = r.iota;
  j["bound"] = r.bound;
  j["is_k_clique"] = r.is_k_clique;
  j["equality"] = r.equality;
  j["extremal_class"] = extremal_class_name(r.extremal_class);
  j["constructed"] = r.constructed ? Json(*r.constructed) : Json(nullptr);
  j["certified"] = r.certified;
  if (r.seconds) j["seconds"] = *r.seconds;
  return j;
}

Json summary_json(const ReportSummary& s) {
  Json j;
  j["records"] = s.records;
  j["k_clique_records"] = s.k_clique_records;
  j["equalities"] = s.equalities;
  j["PureSpecial"] = s.pure_special;
  j["C5_k2"] = s.c5_k2;
  j["C4_k3_l1or3"] = s.c4_k3;
  j["violations"] = s.violations;
  j["uncertified"] = s.uncertified;
  j["skipped_disconnected"] = s.skipped_disconnected;
  if (s.max_seconds) j["max_seconds"] = *s.max_seconds;
  return j;
}

}  // namespace

std::string_view extremal_class_name(ExtremalClass c) {
  switch (c) {
    case ExtremalClass::PureSpecial: return "PureSpecial";
    case ExtremalClass::C5_k2: return "C5_k2";
    case ExtremalClass::C4_k3_l1or3: return "C4_k3_l1or3";
    case ExtremalClass::NotExtremal: return "NotExtremal";
    case ExtremalClass::Violation: return "VIOLATION";
  }
  return "?";
}

CorpusSource CorpusSource::builtin(std::size_t max_n) { return {Kind::Builtin, max_n, {}}; }

CorpusSource CorpusSource::file(std::string path) { return {Kind::Graph6File, 0, std::move(path)}; }

Corpus load_corpus(const CorpusSource& source) {
  Corpus corpus;
  if (source.kind == CorpusSource::Kind::Builtin) {
    corpus.graphs = enumerate_connected_up_to(source.max_n);
    return corpus;
  }
  for (auto& g : read_graph_file(source.path)) {
    if (g.order() > 0 && is_connected(g)) {
      corpus.graphs.push_back(std::move(g));
    } else {
      ++corpus.skipped_disconnected;
    }
  }
  return corpus;
}

ReportSummary VerificationReport::summary() const {
  ReportSummary s;
  s.records = records.size();
  s.skipped_disconnected = skipped_disconnected;
  for (const auto& r : records) {
    if (r.is_k_clique) ++s.k_clique_records;
    if (r.equality) ++s.equalities;
    if (!r.certified) ++s.uncertified;
    switch (r.extremal_class) {
      case ExtremalClass::PureSpecial: ++s.pure_special; break;
      case ExtremalClass::C5_k2: ++s.c5_k2; break;
      case ExtremalClass::C4_k3_l1or3: ++s.c4_k3; break;
      case ExtremalClass::Violation: ++s.violations; break;
      case ExtremalClass::NotExtremal: break;
    }
    if (r.seconds) s.max_seconds = std::max(s.max_seconds.value_or(0.0), *r.seconds);
  }
  return s;
}

ExtremalClass classify(const Graph& g, int k, int l, std::size_t iota, std::size_t bound) {
  if (iota > bound) return ExtremalClass::Violation;
  ExtremalClass c = ExtremalClass::NotExtremal;
  if (recognize_pure_special(g, k)) {
    c = ExtremalClass::PureSpecial;
  } else if (k == 2 && is_cycle_of_length(g, 5)) {
    c = ExtremalClass::C5_k2;
  } else if (k == 3 && (l == 1 || l == 3) && is_cycle_of_length(g, 4)) {
    c = ExtremalClass::C4_k3_l1or3;
  }
  const bool equality = attains_bound(iota, g.size(), k);
  if (equality != (c != ExtremalClass::NotExtremal)) return ExtremalClass::Violation;
  return c;
}

VerificationReport verify_theorem(const Corpus& corpus, const VerifyOptions& options) {
  struct Item {
    std::size_t graph;
    int k;
    int l;
  };
  std::vector<Item> items;
  for (std::size_t i = 0; i < corpus.graphs.size(); ++i)
    for (int k = options.k_min; k <= options.k_max; ++k)
      for (int l : options.ls) items.push_back({i, k, l});

  VerificationReport report;
  report.skipped_disconnected = corpus.skipped_disconnected;
  report.records.resize(items.size());
  parallel_for(items.size(), options.threads, [&](std::size_t idx) {
    const auto start = std::chrono::steady_clock::now();
    const Item& item = items[idx];
    const Graph& g = corpus.graphs[item.graph];
    VerificationRecord& r = report.records[idx];
    r.graph6 = write_graph6(g);
    r.n = g.order();
    r.m = g.size();
    r.k = item.k;
    r.l = item.l;
    r.bound = bound_value(r.m, item.k);
    const auto solved = isolation_number(g, FamilySpec::indexed(item.l, item.k), SolveOptions{options.node_budget});
    r.iota = solved.size;
    r.certified = solved.certified == Certification::ExactMinimum;
    r.is_k_clique = is_k_clique(g, item.k);
    if (!r.is_k_clique) {
      r.equality = attains_bound(r.iota, r.m, item.k);
      r.extremal_class = classify(g, item.k, item.l, r.iota, r.bound);
      if (options.run_constructor) {
        try {
          r.constructed = construct_isolating(g, item.k, item.l).set.size();
          if (*r.constructed > r.bound || *r.constructed < r.iota) r.extremal_class = ExtremalClass::Violation;
        } catch (const std::logic_error&) {
          r.extremal_class = ExtremalClass::Violation;
        }
      }
    }
    if (options.timing)
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  });

  std::stable_sort(report.records.begin(), report.records.end(), [](const auto& a, const auto& b) {
    return std::tie(a.graph6, a.k, a.l) < std::tie(b.graph6, b.k, b.l);
  });
  return report;
}

VerificationReport equality_records(const VerificationReport& report) {
  VerificationReport out;
  out.skipped_disconnected = report.skipped_disconnected;
  for (const auto& r : report.records)
    if (r.equality || r.extremal_class == ExtremalClass::Violation) out.records.push_back(r);
  return out;
}

void write_report(std::ostream& out, const VerificationReport& report, ReportFormat format) {
  const ReportSummary s = report.summary();
  if (format == ReportFormat::JsonLines) {
    for (const auto& r : report.records) out << record_json(r).dump() << '\n';
    Json footer;
    footer["summary"] = summary_json(s);
    out << footer.dump() << '\n';
    return;
  }
  const bool timed = s.max_seconds.has_value();
  out << "graph6,n,m,k,l,iota,bound,is_k_clique,equality,extremal_class,constructed,certified" << (timed ? ",seconds" : "")
      << '\n';
  for (const auto& r : report.records) {
    out << r.graph6 << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.l << ',' << r.iota << ',' << r.bound << ','
        << (r.is_k_clique ? "true" : "false") << ',' << (r.equality ? "true" : "false") << ','
        << extremal_class_name(r.extremal_class) << ',' << (r.constructed ? std::to_string(*r.constructed) : "") << ','
        << (r.certified ? "true" : "false");
    if (timed) out << ',' << (r.seconds ? std::to_string(*r.seconds) : "");
    out << '\n';
  }
  const Json footer = summary_json(s);
  for (const auto& [key, value] : footer.items()) out << "# " << key << '=' << value.dump() << '\n';
}

CycleReport cycle_check(const Corpus& corpus, std::size_t threads) {
  CycleReport report;
  report.skipped_disconnected = corpus.skipped_disconnected;
  std::vector<const Graph*> graphs;
  for (const auto& g : corpus.graphs) {
    if (g.order() == 3 && is_complete(g)) {
      ++report.skipped_triangles;
    } else {
      graphs.push_back(&g);
    }
  }
  report.records.resize(graphs.size());
  parallel_for(graphs.size(), threads, [&](std::size_t i) {
    const Graph& g = *graphs[i];
    CycleRecord& r = report.records[i];
    r.graph6 = write_graph6(g);
    r.n = g.order();
    r.m = g.size();
    r.iota_cycles = isolation_number(g, FamilySpec::cycles()).size;
    r.iota_min_regular3 = isolation_number(g, FamilySpec::min_regular(3)).size;
    r.bound = bound_value(r.m, 3);
    r.equality = attains_bound(r.iota_cycles, r.m, 3);
    std::string cls = "NotExtremal";
    if (recognize_pure_special(g, 3)) {
      cls = "PureSpecial";
    } else if (is_cycle_of_length(g, 4)) {
      cls = "C4";
    }
    const bool ok = r.iota_cycles <= r.bound && r.equality == (cls != "NotExtremal") &&
                    r.iota_cycles == r.iota_min_regular3;
    r.extremal_class = ok ? cls : "VIOLATION";
  });
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const auto& a, const auto& b) { return a.graph6 < b.graph6; });
  for (const auto& r : report.records)
    if (r.extremal_class == "VIOLATION") ++report.violations;
  return report;
}

void write_cycle_report(std::ostream& out, const CycleReport& report, ReportFormat format) {
  std::size_t equalities = 0;
  for (const auto& r : report.records)
    if (r.equality) ++equalities;
  Json summary;
  summary["records"] = report.records.size();
  summary["equalities"] = equalities;
  summary["violations"] = report.violations;
  summary["skipped_triangles"] = report.skipped_triangles;
  summary["skipped_disconnected"] = report.skipped_disconnected;

  if (format == ReportFormat::JsonLines) {
    for (const auto& r : report.records) {
      Json j;
      j["graph6"] = r.graph6;
      j["n"] = r.n;
      j["m"] = r.m;
      j["iota_cycles"] = r.iota_cycles;
      j["iota_minreg3"] = r.iota_min_regular3;
      j["bound"] = r.bound;
      j["equality"] = r.equality;
      j["extremal_class"] = r.extremal_class;
      out << j.dump() << '\n';
    }
    Json footer;
    footer["summary"] = summary;
    out << footer.dump() << '\n';
    return;
  }
  out << "graph6,n,m,iota_cycles,iota_minreg3,bound,equality,extremal_class\n";
  for (const auto& r : report.records) {
    out << r.graph6 << ',' << r.n << ',' << r.m << ',' << r.iota_cycles << ',' << r.iota_min_regular3 << ','
        << r.bound << ',' << (r.equality ? "true" : "false") << ',' << r.extremal_class << '\n';
  }
  for (const auto& [key, value] : summary.items()) out << "# " << key << '=' << value.dump() << '\n';
}

}  // namespace isolation
