#pragma once

#include <cstdint>
#include <string>

#include "centrafactor/centrality.hpp"
#include "centrafactor/efa.hpp"
#include "centrafactor/error.hpp"

namespace centrafactor {

enum class LccPolicy { Extract, Error };

inline std::string to_string(LccPolicy p) { return p == LccPolicy::Extract ? "extract" : "error"; }

inline LccPolicy lcc_policy_from_string(const std::string& s) {
  if (s == "extract") return LccPolicy::Extract;
  if (s == "error") return LccPolicy::Error;
  throw ConfigError("lcc_policy must be 'extract' or 'error', got '" + s + "'");
}

struct AnalysisConfig {
  double communality_threshold = 0.98;
  double variance_threshold = 0.99;
  double strong_threshold = 0.79;
  bool kaiser_normalize = false;
  double tie_tol = 1e-6;
  double evc_tol = 1e-10;
  int evc_max_iter = 1000;
  double varimax_tol = 1e-10;
  int varimax_max_sweeps = 500;
  std::size_t max_factors = 3;
  LccPolicy lcc_policy = LccPolicy::Extract;
  std::uint64_t seed = 1;

  void validate() const {
    auto unit = [](double v, const char* name) {
      if (!(v > 0.0 && v <= 1.0)) throw ConfigError(std::string(name) + " must lie in (0, 1]");
    };
    auto positive = [](double v, const char* name) {
      if (!(v > 0.0)) throw ConfigError(std::string(name) + " must be positive");
    };
    unit(communality_threshold, "communality_threshold");
    unit(variance_threshold, "variance_threshold");
    unit(strong_threshold, "strong_threshold");
    positive(tie_tol, "tie_tol");
    positive(evc_tol, "evc_tol");
    positive(varimax_tol, "varimax_tol");
    if (evc_max_iter < 1) throw ConfigError("evc_max_iter must be >= 1");
    if (varimax_max_sweeps < 1) throw ConfigError("varimax_max_sweeps must be >= 1");
    if (max_factors < 1 || max_factors > 3) throw ConfigError("max_factors must lie in [1, 3]");
  }

  PowerIterationOptions power_iteration() const { return {evc_tol, evc_max_iter}; }

  FitOptions fit_options() const {
    return {communality_threshold, variance_threshold, max_factors, tie_tol,
            VarimaxOptions{varimax_tol, varimax_max_sweeps, kaiser_normalize}};
  }
};

}  // namespace centrafactor
