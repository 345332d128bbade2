#pragma once

#include <cstdio>
#include <string>

#include "centrafactor/report.hpp"
#include "json.hpp"

namespace centrafactor {

using json = nlohmann::ordered_json;

inline json matrix_to_json(const Matrix& m) { return m.to_rows(); }

inline Matrix matrix_from_json(const json& j) {
  return Matrix::from_rows(j.get<std::vector<std::vector<double>>>());
}

inline void to_json(json& j, const CcaResult& c) {
  j = json{{"ccc", c.ccc}, {"weights_x", c.weights_x}, {"weights_y", c.weights_y}, {"regime", to_string(c.regime)}};
}

inline void from_json(const json& j, CcaResult& c) {
  c.ccc = j.at("ccc").get<double>();
  c.weights_x = j.at("weights_x").get<std::array<double, 2>>();
  c.weights_y = j.at("weights_y").get<std::array<double, 2>>();
  c.regime = regime_from_string(j.at("regime").get<std::string>());
}

/// Factor indices are written 1-based ("Factor-1" is 1).
inline void to_json(json& j, const FactorModel& f) {
  json dominant = json::object();
  for (std::size_t k = 0; k < f.dominant.size() && k < kMetricCount; ++k) {
    json ids = json::array();
    for (std::size_t idx : f.dominant[k]) ids.push_back(idx + 1);
    dominant[kMetricNames[k]] = ids;
  }
  j = json{{"m", f.factor_count},
           {"variance_retention_m", f.variance_retention_count},
           {"loadings", matrix_to_json(f.loadings)},
           {"communalities", f.communalities},
           {"dominant", dominant},
           {"rotation", matrix_to_json(f.rotation)},
           {"kaiser_normalize", f.kaiser_normalize},
           {"warnings", f.warnings}};
}

inline void from_json(const json& j, FactorModel& f) {
  f.factor_count = j.at("m").get<std::size_t>();
  f.variance_retention_count = j.at("variance_retention_m").get<std::size_t>();
  f.loadings = matrix_from_json(j.at("loadings"));
  f.communalities = j.at("communalities").get<std::vector<double>>();
  f.dominant.assign(kMetricCount, {});
  for (std::size_t k = 0; k < kMetricCount; ++k)
    for (std::size_t idx : j.at("dominant").at(kMetricNames[k]).get<std::vector<std::size_t>>())
      f.dominant[k].push_back(idx - 1);
  f.rotation = matrix_from_json(j.at("rotation"));
  f.kaiser_normalize = j.at("kaiser_normalize").get<bool>();
  f.warnings = j.at("warnings").get<std::vector<std::string>>();
}

inline void to_json(json& j, const StageError& e) {
  j = json{{"stage", e.stage}, {"kind", e.kind}, {"message", e.message}, {"detail", e.detail}};
}

inline void from_json(const json& j, StageError& e) {
  j.at("stage").get_to(e.stage);
  j.at("kind").get_to(e.kind);
  j.at("message").get_to(e.message);
  j.at("detail").get_to(e.detail);
}

inline void to_json(json& j, const NetworkReport& r) {
  json summary = json::object();
  for (std::size_t k = 0; k < r.centrality_summary.size(); ++k) {
    const auto& s = r.centrality_summary[k];
    summary[kMetricNames[k]] = json{{"mean", s.mean}, {"sd", s.sd}, {"min", s.min}, {"max", s.max}};
  }
  const auto& d = r.diagnostics;
  j = json{{"name", r.name},
           {"nodes", r.nodes},
           {"edges", r.edges},
           {"diagnostics",
            {{"input_nodes", d.input_nodes},
             {"input_edges", d.input_edges},
             {"lcc_nodes_removed", d.lcc_nodes_removed},
             {"self_loops_dropped", d.self_loops_dropped},
             {"duplicates_collapsed", d.duplicates_collapsed},
             {"warnings", d.warnings}}},
           {"centrality_summary", summary},
           {"correlation", r.correlation ? matrix_to_json(*r.correlation) : json(nullptr)},
           {"eigenvalues", r.eigenvalues},
           {"cca", r.cca ? json(*r.cca) : json(nullptr)},
           {"factor_model", r.factor_model ? json(*r.factor_model) : json(nullptr)},
           {"errors", r.errors}};
}

inline void from_json(const json& j, NetworkReport& r) {
  r = NetworkReport{};
  j.at("name").get_to(r.name);
  j.at("nodes").get_to(r.nodes);
  j.at("edges").get_to(r.edges);
  const json& d = j.at("diagnostics");
  d.at("input_nodes").get_to(r.diagnostics.input_nodes);
  d.at("input_edges").get_to(r.diagnostics.input_edges);
  d.at("lcc_nodes_removed").get_to(r.diagnostics.lcc_nodes_removed);
  d.at("self_loops_dropped").get_to(r.diagnostics.self_loops_dropped);
  d.at("duplicates_collapsed").get_to(r.diagnostics.duplicates_collapsed);
  d.at("warnings").get_to(r.diagnostics.warnings);
  const json& summary = j.at("centrality_summary");
  if (!summary.empty())
    for (const auto& name : kMetricNames) {
      const json& s = summary.at(name);
      r.centrality_summary.push_back(
          {s.at("mean").get<double>(), s.at("sd").get<double>(), s.at("min").get<double>(), s.at("max").get<double>()});
    }
  if (!j.at("correlation").is_null()) r.correlation = matrix_from_json(j.at("correlation"));
  j.at("eigenvalues").get_to(r.eigenvalues);
  if (!j.at("cca").is_null()) r.cca = j.at("cca").get<CcaResult>();
  if (!j.at("factor_model").is_null()) r.factor_model = j.at("factor_model").get<FactorModel>();
  j.at("errors").get_to(r.errors);
}

inline void to_json(json& j, const CorpusReport& r) {
  json sorted = json::array();
  for (const auto& e : r.sorted_ccc) sorted.push_back({{"name", e.name}, {"ccc", e.ccc}});
  j = json{{"strong_threshold", r.strong_threshold},
           {"network_count", r.networks.size()},
           {"modeled", r.modeled},
           {"sorted_ccc", sorted},
           {"plot_order", r.plot_order},
           {"contingency", r.contingency},
           {"dominant_tallies", r.dominant_tallies},
           {"deg_evc_same_factor", r.deg_evc_same_factor},
           {"bwc_clc_same_factor", r.bwc_clc_same_factor},
           {"networks", r.networks}};
}

inline void from_json(const json& j, CorpusReport& r) {
  r = CorpusReport{};
  j.at("strong_threshold").get_to(r.strong_threshold);
  j.at("networks").get_to(r.networks);
  aggregate(r);
}

inline std::string to_json_text(const CorpusReport& r) { return json(r).dump(2) + "\n"; }
inline std::string to_json_text(const NetworkReport& r) { return json(r).dump(2) + "\n"; }

/// One row per network: name, n, m_edges, ccc, regime, factor_count,
/// dominant factors per metric, min communality. Missing values are empty.
inline std::string summary_csv(const CorpusReport& r) {
  std::string out = "name,n,m_edges,ccc,regime,factor_count,dom_deg,dom_evc,dom_bwc,dom_clc,min_communality\n";
  char buf[64];
  for (const auto& net : r.networks) {
    std::string name = net.name;
    if (name.find_first_of(",\"") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : name) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      name = quoted + "\"";
    }
    out += name + "," + std::to_string(net.nodes) + "," + std::to_string(net.edges) + ",";
    if (net.cca) {
      std::snprintf(buf, sizeof buf, "%.10g", net.cca->ccc);
      out += std::string(buf) + "," + to_string(net.cca->regime);
    } else {
      out += ",";
    }
    out += ",";
    if (net.factor_model) {
      const auto& f = *net.factor_model;
      out += std::to_string(f.factor_count);
      for (const auto& d : f.dominant) out += "," + factor_set_key(d);
      std::snprintf(buf, sizeof buf, ",%.10g", *std::min_element(f.communalities.begin(), f.communalities.end()));
      out += buf;
    } else {
      out += ",,,,,";
    }
    out += "\n";
  }
  return out;
}

}  // namespace centrafactor
