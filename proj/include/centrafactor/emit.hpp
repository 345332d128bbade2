#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "centrafactor/error.hpp"
#include "centrafactor/serialize.hpp"
#include "centrafactor/svg.hpp"

namespace centrafactor {

struct OutputFormats {
  bool json = true;
  bool csv = true;
  bool svg = true;
};

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << content;
  if (!out.flush()) throw IoError("failed writing '" + path.string() + "'");
}

/// Writes report.json, summary.csv, ccc.svg and loadings_<metric>.svg into
/// `out_dir` (created if missing). Returns the written paths.
inline std::vector<std::filesystem::path> emit_reports(const CorpusReport& report,
                                                       const std::filesystem::path& out_dir,
                                                       OutputFormats formats = {}) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create '" + out_dir.string() + "': " + ec.message());
  std::vector<std::filesystem::path> written;
  auto put = [&](const std::string& name, const std::string& content) {
    write_file(out_dir / name, content);
    written.push_back(out_dir / name);
  };
  if (formats.json) put("report.json", to_json_text(report));
  if (formats.csv) put("summary.csv", summary_csv(report));
  if (formats.svg) {
    put("ccc.svg", plot_ccc_distribution(report));
    const auto charts = plot_factor_loadings(report);
    for (std::size_t k = 0; k < charts.size(); ++k) put("loadings_" + kMetricNames[k] + ".svg", charts[k]);
  }
  return written;
}

}  // namespace centrafactor
