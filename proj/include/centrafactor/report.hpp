#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "centrafactor/cca.hpp"
#include "centrafactor/centrality.hpp"
#include "centrafactor/config.hpp"
#include "centrafactor/efa.hpp"
#include "centrafactor/error.hpp"
#include "centrafactor/graph.hpp"
#include "centrafactor/linalg.hpp"
#include "centrafactor/manifest.hpp"

namespace centrafactor {

struct StageError {
  std::string stage;  // input, centrality, correlation, eigen, cca, efa
  std::string kind;
  std::string message;
  std::vector<double> detail;  // e.g. best communalities for ModelNotFound

  bool operator==(const StageError&) const = default;
};

struct ColumnSummary {
  double mean = 0.0;
  double sd = 0.0;  // population
  double min = 0.0;
  double max = 0.0;

  bool operator==(const ColumnSummary&) const = default;
};

struct NetworkDiagnostics {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_collapsed = 0;
  std::size_t input_nodes = 0;
  std::size_t input_edges = 0;
  std::size_t lcc_nodes_removed = 0;
  std::vector<std::string> warnings;

  bool operator==(const NetworkDiagnostics&) const = default;
};

struct NetworkReport {
  std::string name;
  std::size_t nodes = 0;  // after LCC extraction
  std::size_t edges = 0;
  NetworkDiagnostics diagnostics;
  std::vector<ColumnSummary> centrality_summary;  // DEG, EVC, BWC, CLC; empty if not computed
  std::optional<Matrix> correlation;
  std::vector<double> eigenvalues;
  std::optional<CcaResult> cca;
  std::optional<FactorModel> factor_model;
  std::vector<StageError> errors;

  bool operator==(const NetworkReport&) const = default;

  bool usable() const { return cca.has_value() || factor_model.has_value(); }
};

namespace detail {

template <typename F>
bool run_stage(NetworkReport& report, const char* stage, F&& body) {
  try {
    body();
    return true;
  } catch (const ModelNotFound& e) {
    report.errors.push_back({stage, e.kind(), e.what(), e.communalities()});
  } catch (const Error& e) {
    report.errors.push_back({stage, e.kind(), e.what(), {}});
  }
  return false;
}

inline std::vector<ColumnSummary> summarize(const Matrix& values) {
  std::vector<ColumnSummary> out;
  for (std::size_t c = 0; c < values.cols(); ++c) {
    const auto col = values.column(c);
    const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
    out.push_back({mean(col), std::sqrt(population_variance(col)), *lo, *hi});
  }
  return out;
}

}  // namespace detail

/// Runs LCC extraction, centralities, correlation, eigendecomposition,
/// CCA and factor fitting. Stage failures are recorded in the report and
/// later stages that do not depend on the failed one still run.
/// `dataset_out`, when given, receives the centrality dataset.
inline NetworkReport analyze_network(const Graph& input, const AnalysisConfig& cfg, std::string name = {},
                                     CentralityDataset* dataset_out = nullptr) {
  cfg.validate();
  NetworkReport report;
  report.name = std::move(name);
  report.diagnostics.input_nodes = input.node_count();
  report.diagnostics.input_edges = input.edge_count();

  std::optional<Graph> lcc;
  detail::run_stage(report, "input", [&] {
    if (input.node_count() == 0) throw ContractViolation("empty graph");
    if (is_connected(input)) {
      lcc = input;
    } else if (cfg.lcc_policy == LccPolicy::Error) {
      throw DisconnectedGraph();
    } else {
      lcc = largest_connected_component(input);
      report.diagnostics.lcc_nodes_removed = input.node_count() - lcc->node_count();
    }
  });
  if (!lcc) return report;
  report.nodes = lcc->node_count();
  report.edges = lcc->edge_count();

  std::optional<CentralityDataset> dataset;
  detail::run_stage(report, "centrality",
                    [&] { dataset = centrality_dataset(*lcc, cfg.power_iteration()); });
  if (!dataset) return report;
  report.centrality_summary = detail::summarize(dataset->values);
  const std::span<const std::string> names(kMetricNames);

  detail::run_stage(report, "cca", [&] {
    Matrix x(dataset->values.rows(), 2), y(dataset->values.rows(), 2);
    x.set_column(0, dataset->column(Metric::Deg));
    x.set_column(1, dataset->column(Metric::Evc));
    y.set_column(0, dataset->column(Metric::Bwc));
    y.set_column(1, dataset->column(Metric::Clc));
    report.cca = cca_first(x, y, cfg.strong_threshold, names);
  });

  if (detail::run_stage(report, "correlation",
                        [&] { report.correlation = correlation_matrix(dataset->values, names); })) {
    std::optional<EigenDecomposition> eigen;
    detail::run_stage(report, "eigen", [&] {
      eigen = jacobi_eigen(*report.correlation);
      report.eigenvalues = eigen->eigenvalues;
    });
    if (eigen) {
      detail::run_stage(report, "efa", [&] {
        report.factor_model = fit_factor_model(*eigen, cfg.fit_options());
        for (const auto& w : report.factor_model->warnings) report.diagnostics.warnings.push_back(w);
      });
    }
  }
  if (dataset_out) *dataset_out = std::move(*dataset);
  return report;
}

/// Loads (or generates) the graph behind a source. Parse diagnostics go to
/// `diag`.
inline Graph load_source(const Source& source, EdgeListDiagnostics* diag = nullptr) {
  if (const auto* spec = std::get_if<GeneratorSpec>(&source.origin)) return generate(*spec);
  const auto& path = std::get<std::filesystem::path>(source.origin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open edge list '" + path.string() + "'");
  auto parsed = parse_edge_list(in);
  if (diag) *diag = parsed.diagnostics;
  return std::move(parsed.graph);
}

inline NetworkReport analyze_source(const Source& source, const AnalysisConfig& cfg) {
  EdgeListDiagnostics diag;
  std::optional<Graph> graph;
  NetworkReport failed;
  failed.name = source.name;
  detail::run_stage(failed, "input", [&] { graph = load_source(source, &diag); });
  if (!graph) return failed;
  NetworkReport report = analyze_network(*graph, cfg, source.name);
  report.diagnostics.self_loops_dropped = diag.self_loops_dropped;
  report.diagnostics.duplicates_collapsed = diag.duplicates_collapsed;
  return report;
}

struct CcaEntry {
  std::string name;
  double ccc = 0.0;

  bool operator==(const CcaEntry&) const = default;
};

struct CorpusReport {
  std::vector<NetworkReport> networks;
  double strong_threshold = 0.79;
  std::vector<CcaEntry> sorted_ccc;  // descending
  /// Network indices in plot order: descending CCC, then networks without
  /// a CCC in source order.
  std::vector<std::size_t> plot_order;
  /// regime -> factor count ("1", "2", "3" or "none") -> networks.
  std::map<std::string, std::map<std::string, std::size_t>> contingency;
  /// metric -> dominant factor set ("1", "1+2", ...) -> networks.
  std::map<std::string, std::map<std::string, std::size_t>> dominant_tallies;
  std::size_t modeled = 0;
  std::size_t deg_evc_same_factor = 0;
  std::size_t bwc_clc_same_factor = 0;
};

/// "1", "1+2": 1-based factor set key.
inline std::string factor_set_key(const std::vector<std::size_t>& factors) {
  std::string key;
  for (std::size_t f : factors) {
    if (!key.empty()) key += '+';
    key += std::to_string(f + 1);
  }
  return key;
}

inline bool share_factor(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::any_of(a.begin(), a.end(),
                     [&](std::size_t f) { return std::find(b.begin(), b.end(), f) != b.end(); });
}

/// Fills the aggregate fields of a report from its network list.
inline void aggregate(CorpusReport& corpus) {
  corpus.sorted_ccc.clear();
  corpus.plot_order.clear();
  corpus.contingency.clear();
  corpus.dominant_tallies.clear();
  corpus.modeled = corpus.deg_evc_same_factor = corpus.bwc_clc_same_factor = 0;

  std::vector<std::size_t> with_cca, without_cca;
  for (std::size_t i = 0; i < corpus.networks.size(); ++i)
    (corpus.networks[i].cca ? with_cca : without_cca).push_back(i);
  std::stable_sort(with_cca.begin(), with_cca.end(), [&](std::size_t a, std::size_t b) {
    return corpus.networks[a].cca->ccc > corpus.networks[b].cca->ccc;
  });
  for (std::size_t i : with_cca) corpus.sorted_ccc.push_back({corpus.networks[i].name, corpus.networks[i].cca->ccc});
  corpus.plot_order = with_cca;
  corpus.plot_order.insert(corpus.plot_order.end(), without_cca.begin(), without_cca.end());

  for (const auto& net : corpus.networks) {
    const std::string m = net.factor_model ? std::to_string(net.factor_model->factor_count) : "none";
    if (net.cca) ++corpus.contingency[to_string(net.cca->regime)][m];
    if (!net.factor_model) continue;
    ++corpus.modeled;
    const auto& dom = net.factor_model->dominant;
    for (std::size_t k = 0; k < kMetricCount; ++k) ++corpus.dominant_tallies[kMetricNames[k]][factor_set_key(dom[k])];
    corpus.deg_evc_same_factor += share_factor(dom[0], dom[1]);
    corpus.bwc_clc_same_factor += share_factor(dom[2], dom[3]);
  }
}

/// Analyzes every source with up to `workers` threads. Results land in
/// source order and the aggregation is sequential, so the report does not
/// depend on the worker count.
inline CorpusReport run_corpus(const std::vector<Source>& sources, const AnalysisConfig& cfg,
                               unsigned workers = 1) {
  cfg.validate();
  if (sources.empty()) throw ConfigError("corpus needs at least one source");
  CorpusReport corpus;
  corpus.strong_threshold = cfg.strong_threshold;
  corpus.networks.resize(sources.size());

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < sources.size(); i = next++) {
      try {
        corpus.networks[i] = analyze_source(sources[i], cfg);
      } catch (const std::exception& e) {
        corpus.networks[i] = NetworkReport{};
        corpus.networks[i].name = sources[i].name;
        corpus.networks[i].errors.push_back({"input", "Unexpected", e.what(), {}});
      }
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(sources.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  aggregate(corpus);
  return corpus;
}

/// Checks a report against the invariants of its embedded values. Returns
/// human-readable violations; empty means valid.
inline std::vector<std::string> validate_report(const NetworkReport& r, const AnalysisConfig& cfg) {
  std::vector<std::string> bad;
  auto fail = [&](const std::string& what) { bad.push_back(r.name + ": " + what); };
  if (r.correlation) {
    const Matrix& c = *r.correlation;
    for (std::size_t i = 0; i < c.rows(); ++i) {
      if (std::abs(c(i, i) - 1.0) > 1e-12) fail("correlation diagonal not 1");
      for (std::size_t j = 0; j < c.cols(); ++j) {
        if (std::abs(c(i, j) - c(j, i)) > 1e-12) fail("correlation not symmetric");
        if (std::abs(c(i, j)) > 1.0 + 1e-12) fail("correlation entry outside [-1, 1]");
      }
    }
  }
  if (!r.eigenvalues.empty()) {
    double sum = 0.0;
    for (double l : r.eigenvalues) sum += l;
    if (std::abs(sum - static_cast<double>(kMetricCount)) > 1e-9) fail("eigenvalues do not sum to 4");
    if (r.eigenvalues.back() < -1e-9) fail("correlation matrix not positive semidefinite");
    if (!std::is_sorted(r.eigenvalues.rbegin(), r.eigenvalues.rend())) fail("eigenvalues not descending");
  }
  if (r.cca) {
    if (!(std::abs(r.cca->ccc) <= 1.0 + 1e-12)) fail("ccc outside [-1, 1]");
    if (r.cca->regime != classify_regime(r.cca->ccc, cfg.strong_threshold)) fail("regime inconsistent with ccc");
    for (const auto* w : {&r.cca->weights_x, &r.cca->weights_y})
      if (std::abs(std::hypot((*w)[0], (*w)[1]) - 1.0) > 1e-12 || (*w)[0] < 0.0) fail("cca weights not oriented unit vectors");
  }
  if (r.factor_model) {
    const FactorModel& f = *r.factor_model;
    if (f.factor_count < 1 || f.factor_count > 3) fail("factor count outside [1, 3]");
    if (f.loadings.cols() != f.factor_count || f.loadings.rows() != kMetricCount) fail("loading matrix shape");
    const auto h2 = communalities(f.loadings);
    for (std::size_t i = 0; i < h2.size() && i < f.communalities.size(); ++i) {
      if (std::abs(h2[i] - f.communalities[i]) > 1e-12) fail("communality mismatch");
      if (f.communalities[i] < cfg.communality_threshold) fail("communality below threshold");
      if (f.communalities[i] > 1.0 + 1e-9) fail("communality above 1");
    }
    if (f.dominant.size() != kMetricCount) fail("dominant map size");
    for (const auto& d : f.dominant) {
      if (d.empty()) fail("metric without dominant factor");
      for (std::size_t k : d)
        if (k >= f.factor_count) fail("dominant factor index out of range");
    }
  }
  return bad;
}

inline std::vector<std::string> validate_report(const CorpusReport& r, const AnalysisConfig& cfg) {
  std::vector<std::string> bad;
  for (const auto& net : r.networks) {
    auto more = validate_report(net, cfg);
    bad.insert(bad.end(), more.begin(), more.end());
  }
  for (const auto& [metric, tally] : r.dominant_tallies) {
    std::size_t total = 0;
    for (const auto& [key, count] : tally) total += count;
    if (total != r.modeled) bad.push_back("dominant tallies for " + metric + " do not sum to modeled count");
  }
  std::size_t with_cca = 0, cells = 0;
  for (const auto& net : r.networks) with_cca += net.cca.has_value();
  for (const auto& [regime, row] : r.contingency)
    for (const auto& [m, count] : row) cells += count;
  if (cells != with_cca) bad.push_back("contingency table does not cover every network with a ccc");
  return bad;
}

}  // namespace centrafactor
