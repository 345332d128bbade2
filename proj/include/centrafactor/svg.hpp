#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <string>
#include <vector>

#include "centrafactor/report.hpp"

namespace centrafactor {

namespace svg {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

/// Plot frame shared by both chart kinds: x is a 1-based network index,
/// y a value range mapped onto the drawing area.
struct Frame {
  double width = 900, height = 420;
  double left = 70, right = 30, top = 50, bottom = 60;
  std::size_t count = 0;
  double y_min = -1, y_max = 1;

  double x(std::size_t index) const {
    const double span = width - left - right;
    return count <= 1 ? left + span / 2 : left + span * static_cast<double>(index) / static_cast<double>(count - 1);
  }
  double y(double v) const { return top + (height - top - bottom) * (y_max - v) / (y_max - y_min); }
};

inline std::string header(const Frame& f, const std::string& title) {
  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(f.width) + "\" height=\"" +
       num(f.height) + "\" viewBox=\"0 0 " + num(f.width) + " " + num(f.height) + "\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + num(f.width) + "\" height=\"" + num(f.height) + "\" fill=\"white\"/>\n";
  s += "<text x=\"" + num(f.width / 2) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
       escape(title) + "</text>\n";
  return s;
}

inline std::string axes(const Frame& f, const std::vector<double>& y_ticks, const std::string& x_label,
                        const std::string& y_label) {
  const double x0 = f.left, x1 = f.width - f.right;
  const double y0 = f.y(f.y_min), y1 = f.y(f.y_max);
  std::string s = "<g stroke=\"black\" stroke-width=\"1\">\n";
  s += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x1) + "\" y2=\"" + num(y0) + "\"/>\n";
  s += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x0) + "\" y2=\"" + num(y1) + "\"/>\n";
  s += "</g>\n<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (double t : y_ticks) {
    s += "<line x1=\"" + num(x0 - 4) + "\" y1=\"" + num(f.y(t)) + "\" x2=\"" + num(x0) + "\" y2=\"" + num(f.y(t)) +
         "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + num(x0 - 8) + "\" y=\"" + num(f.y(t) + 4) + "\" text-anchor=\"end\">" + num(t) + "</text>\n";
  }
  // Network numbers: every tick when few, otherwise about ten.
  const std::size_t step = f.count <= 20 ? 1 : (f.count + 9) / 10;
  for (std::size_t i = 0; i < f.count; i += step)
    s += "<text x=\"" + num(f.x(i)) + "\" y=\"" + num(y0 + 16) + "\" text-anchor=\"middle\">" +
         std::to_string(i + 1) + "</text>\n";
  s += "<text x=\"" + num((x0 + x1) / 2) + "\" y=\"" + num(f.height - 16) + "\" text-anchor=\"middle\">" +
       escape(x_label) + "</text>\n";
  s += "<text x=\"18\" y=\"" + num((y0 + y1) / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
       num((y0 + y1) / 2) + ")\">" + escape(y_label) + "</text>\n";
  s += "</g>\n";
  return s;
}

inline std::string hline(const Frame& f, double v, const std::string& style) {
  return "<line x1=\"" + num(f.left) + "\" y1=\"" + num(f.y(v)) + "\" x2=\"" + num(f.width - f.right) + "\" y2=\"" +
         num(f.y(v)) + "\" " + style + "/>\n";
}

inline constexpr std::array<const char*, 3> kFactorColors{"#1f77b4", "#d62728", "#2ca02c"};

inline std::string marker(std::size_t factor, double cx, double cy, const std::string& tip) {
  const std::string color = kFactorColors[factor % kFactorColors.size()];
  const std::string title = "<title>" + escape(tip) + "</title>";
  switch (factor % 3) {
    case 0:
      return "<circle class=\"factor-1\" cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"3.5\" fill=\"" + color +
             "\">" + title + "</circle>\n";
    case 1:
      return "<rect class=\"factor-2\" x=\"" + num(cx - 3) + "\" y=\"" + num(cy - 3) +
             "\" width=\"6\" height=\"6\" fill=\"" + color + "\">" + title + "</rect>\n";
    default:
      return "<polygon class=\"factor-3\" points=\"" + num(cx) + "," + num(cy - 4) + " " + num(cx - 4) + "," +
             num(cy + 3) + " " + num(cx + 4) + "," + num(cy + 3) + "\" fill=\"" + color + "\">" + title +
             "</polygon>\n";
  }
}

}  // namespace svg

/// Signed CCC per network, sorted in decreasing order, with dashed guides
/// at ±strong_threshold.
inline std::string plot_ccc_distribution(const CorpusReport& r) {
  svg::Frame f;
  // Shares x positions with the loading charts.
  f.count = std::max(r.plot_order.size(), r.sorted_ccc.size());
  std::string s = svg::header(f, "Canonical correlation (DEG, EVC) vs (BWC, CLC)");
  s += svg::axes(f, {-1, -0.5, 0, 0.5, 1}, "Network # (decreasing CCC)", "CCC");
  s += svg::hline(f, 0.0, "stroke=\"#999999\" stroke-width=\"0.5\"");
  for (double g : {r.strong_threshold, -r.strong_threshold})
    s += svg::hline(f, g, "class=\"guide\" stroke=\"#888888\" stroke-dasharray=\"4 3\"");
  s += "<g class=\"ccc\">\n";
  for (std::size_t i = 0; i < r.sorted_ccc.size(); ++i) {
    const auto& e = r.sorted_ccc[i];
    s += "<circle cx=\"" + svg::num(f.x(i)) + "\" cy=\"" + svg::num(f.y(e.ccc)) +
         "\" r=\"3.5\" fill=\"#1f77b4\"><title>" + svg::escape(e.name) + ": " + svg::num(e.ccc) + "</title></circle>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

/// One chart per metric (DEG, EVC, BWC, CLC): |final loading| per factor
/// for every network, in the CCC plot's order. Networks without a factor
/// model get a grey gap marker on the x axis.
inline std::vector<std::string> plot_factor_loadings(const CorpusReport& r) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < kMetricCount; ++k) {
    svg::Frame f;
    f.count = r.plot_order.size();
    f.y_min = 0.0;
    f.y_max = 1.0;
    std::string name = kMetricNames[k];
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::toupper(c); });
    std::string s = svg::header(f, "Final factor loadings: " + name);
    s += svg::axes(f, {0, 0.25, 0.5, 0.75, 1}, "Network # (same order as CCC plot)", "|loading|");
    for (std::size_t j = 0; j < 3; ++j) {
      const double lx = f.width - f.right - 240 + 80 * static_cast<double>(j);
      s += svg::marker(j, lx, 38, "Factor-" + std::to_string(j + 1));
      s += "<text x=\"" + svg::num(lx + 8) + "\" y=\"42\" font-family=\"sans-serif\" font-size=\"11\">Factor-" +
           std::to_string(j + 1) + "</text>\n";
    }
    s += "<g class=\"loadings\">\n";
    for (std::size_t pos = 0; pos < r.plot_order.size(); ++pos) {
      const auto& net = r.networks[r.plot_order[pos]];
      const double cx = f.x(pos);
      if (!net.factor_model) {
        const double cy = f.y(0.0);
        s += "<path class=\"gap\" d=\"M" + svg::num(cx - 3) + " " + svg::num(cy - 3) + " L" + svg::num(cx + 3) + " " +
             svg::num(cy + 3) + " M" + svg::num(cx - 3) + " " + svg::num(cy + 3) + " L" + svg::num(cx + 3) + " " +
             svg::num(cy - 3) + "\" stroke=\"#999999\"><title>" + svg::escape(net.name) +
             ": no factor model</title></path>\n";
        continue;
      }
      const Matrix& l = net.factor_model->loadings;
      for (std::size_t j = 0; j < l.cols(); ++j) {
        const double v = std::abs(l(k, j));
        s += svg::marker(j, cx, f.y(std::min(v, 1.0)), net.name + " Factor-" + std::to_string(j + 1) + ": " + svg::num(v));
      }
    }
    s += "</g>\n</svg>\n";
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace centrafactor
