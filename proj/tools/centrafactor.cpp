// centrafactor command-line front end: analyze, corpus, generate.

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "centrafactor/centrafactor.hpp"

namespace cf = centrafactor;

namespace {

enum Exit { kOk = 0, kNoUsable = 1, kIo = 2, kConfig = 3 };

void add_analysis_flags(CLI::App& app, cf::AnalysisConfig& cfg, std::string& lcc_policy) {
  auto env = [](std::string name) {
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::toupper(c); });
    return "CENTRAFACTOR_" + name;
  };
  auto add = [&](const std::string& name, auto& field, const std::string& help) {
    app.add_option("--" + name, field, help)->envname(env(name))->capture_default_str()->group("Analysis");
  };
  add("communality_threshold", cfg.communality_threshold, "Minimum communality every metric must reach");
  add("variance_threshold", cfg.variance_threshold, "Cumulative explained variance for the retention count");
  add("strong_threshold", cfg.strong_threshold, "|CCC| at or above this is a strong regime");
  add("tie_tol", cfg.tie_tol, "Loadings within this of the row maximum are co-dominant");
  add("evc_tol", cfg.evc_tol, "Power-iteration convergence tolerance");
  add("evc_max_iter", cfg.evc_max_iter, "Power-iteration iteration cap");
  add("varimax_tol", cfg.varimax_tol, "Stop varimax when a sweep improves the criterion by less than this");
  add("varimax_max_sweeps", cfg.varimax_max_sweeps, "Varimax sweep cap");
  add("max_factors", cfg.max_factors, "Largest factor count tried");
  add("seed", cfg.seed, "Default seed for generator specs that omit one");
  app.add_option("--lcc_policy", lcc_policy, "Disconnected input: extract the largest component or error")
      ->envname(env("lcc_policy"))
      ->check(CLI::IsMember({"extract", "error"}))
      ->capture_default_str()
      ->group("Analysis");
  app.add_flag("--kaiser_normalize", cfg.kaiser_normalize, "Row-normalize loadings before varimax")
      ->envname(env("kaiser_normalize"))
      ->group("Analysis");
}

cf::OutputFormats parse_formats(const std::vector<std::string>& names) {
  cf::OutputFormats f{false, false, false};
  for (const auto& n : names) {
    if (n == "json") f.json = true;
    else if (n == "csv") f.csv = true;
    else if (n == "svg") f.svg = true;
    else throw cf::ConfigError("unknown output format '" + n + "'");
  }
  return f;
}

void print_network(const cf::NetworkReport& r) {
  std::printf("%s: n=%zu m=%zu\n", r.name.c_str(), r.nodes, r.edges);
  if (r.cca) std::printf("  ccc %.4f (%s)\n", r.cca->ccc, cf::to_string(r.cca->regime).c_str());
  if (r.factor_model) {
    const auto& f = *r.factor_model;
    std::printf("  factors %zu (variance rule %zu)\n", f.factor_count, f.variance_retention_count);
    for (std::size_t k = 0; k < cf::kMetricCount; ++k) {
      std::printf("  %s h2=%.4f dominant=%s loadings", cf::kMetricNames[k].c_str(), f.communalities[k],
                  cf::factor_set_key(f.dominant[k]).c_str());
      for (double x : f.loadings.row(k)) std::printf(" %+.4f", x);
      std::printf("\n");
    }
  }
  for (const auto& e : r.errors) std::printf("  [%s] %s: %s\n", e.stage.c_str(), e.kind.c_str(), e.message.c_str());
}

void write_or_print(const std::string& target, const std::string& content) {
  if (target == "-") std::cout << content;
  else cf::write_file(target, content);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Centrality metrics, factor analysis and canonical correlation for undirected graphs"};
  app.set_config("--config", "", "TOML file with analysis settings; overrides CENTRAFACTOR_* variables, flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.footer("Settings precedence: defaults < CENTRAFACTOR_* environment < --config file < flags.\n"
             "Exit codes: 0 ok, 1 no usable report, 2 I/O error, 3 configuration error.");
  app.require_subcommand(1);
  app.fallthrough();

  cf::AnalysisConfig cfg;
  std::string lcc_policy = "extract";
  add_analysis_flags(app, cfg, lcc_policy);

  auto* analyze = app.add_subcommand("analyze", "Analyze one edge list");
  std::string edge_path, json_out, svg_dir, csv_out, dataset_out;
  analyze->add_option("edgelist", edge_path, "Edge-list file")->required();
  analyze->add_option("--json", json_out, "Write the report as JSON ('-' for stdout)");
  analyze->add_option("--svg", svg_dir, "Write CCC and loading plots into this directory");
  analyze->add_option("--csv", csv_out, "Write the one-row summary CSV ('-' for stdout)");
  analyze->add_option("--dataset-csv", dataset_out, "Write the per-node centrality table ('-' for stdout)");

  auto* corpus = app.add_subcommand("corpus", "Analyze every source listed in a manifest");
  std::string manifest_path, out_dir = "out";
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::string> formats{"json", "csv", "svg"};
  corpus->add_option("manifest", manifest_path, "Manifest: one edge-list path or gen:<model>:<params>:<seed> per line")
      ->required();
  corpus->add_option("--out,-o", out_dir, "Output directory")->capture_default_str();
  corpus->add_option("--workers,-j", workers, "Worker threads")->envname("CENTRAFACTOR_WORKERS")->capture_default_str();
  corpus->add_option("--formats", formats, "Outputs to write: json, csv, svg")->delimiter(',')->capture_default_str();

  auto* gen = app.add_subcommand("generate", "Write a synthetic graph as an edge list");
  std::string model, gen_out = "-";
  gen->add_option("--model,-m", model,
                  "random:n=..,p=.. | scale-free:n=..,m=.. | small-world:n=..,k=..,beta=.. [:seed]")
      ->required();
  gen->add_option("--output,-o", gen_out, "Output file ('-' for stdout)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    cfg.lcc_policy = cf::lcc_policy_from_string(lcc_policy);
    cfg.validate();

    if (*gen) {
      const cf::Graph g = cf::generate(cf::parse_generator_spec(model, cfg.seed));
      write_or_print(gen_out, cf::serialize_edge_list(g));
      return kOk;
    }

    if (*analyze) {
      const cf::Source source{edge_path, std::filesystem::path(edge_path)};
      cf::EdgeListDiagnostics diag;
      cf::Graph graph;
      try {
        graph = cf::load_source(source, &diag);
      } catch (const cf::ParseError& e) {
        std::fprintf(stderr, "error: %s: %s\n", edge_path.c_str(), e.what());
        return kNoUsable;
      }
      cf::CentralityDataset dataset;
      cf::CorpusReport single;
      single.strong_threshold = cfg.strong_threshold;
      single.networks.push_back(cf::analyze_network(graph, cfg, edge_path, &dataset));
      auto& report = single.networks.front();
      report.diagnostics.self_loops_dropped = diag.self_loops_dropped;
      report.diagnostics.duplicates_collapsed = diag.duplicates_collapsed;
      cf::aggregate(single);

      if (json_out.empty() && csv_out.empty() && dataset_out.empty()) print_network(report);
      if (!json_out.empty()) write_or_print(json_out, cf::to_json_text(report));
      if (!csv_out.empty()) write_or_print(csv_out, cf::summary_csv(single));
      if (!dataset_out.empty() && !dataset.labels.empty()) write_or_print(dataset_out, cf::to_csv(dataset));
      if (!svg_dir.empty()) cf::emit_reports(single, svg_dir, {false, false, true});
      return report.usable() ? kOk : kNoUsable;
    }

    const auto fmt = parse_formats(formats);
    const auto sources = cf::load_manifest(manifest_path, cfg.seed);
    const cf::CorpusReport report = cf::run_corpus(sources, cfg, workers);
    cf::emit_reports(report, out_dir, fmt);
    std::size_t usable = 0;
    for (const auto& net : report.networks) {
      usable += net.usable();
      for (const auto& e : net.errors)
        std::fprintf(stderr, "%s [%s] %s: %s\n", net.name.c_str(), e.stage.c_str(), e.kind.c_str(), e.message.c_str());
    }
    std::printf("%zu of %zu networks usable, %zu modeled; outputs in %s\n", usable, report.networks.size(),
                report.modeled, out_dir.c_str());
    return usable > 0 ? kOk : kNoUsable;
  } catch (const cf::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kConfig;
  } catch (const cf::IoError& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return kIo;
  } catch (const cf::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kNoUsable;
  }
}
