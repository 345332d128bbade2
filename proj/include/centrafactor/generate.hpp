#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "centrafactor/error.hpp"
#include "centrafactor/graph.hpp"

namespace centrafactor {

// Erdos-Renyi G(n, p).
struct RandomModel {
  std::size_t n = 0;
  double p = 0.0;
};

// Preferential attachment: each new node links to `m` distinct existing
// nodes picked proportionally to degree, starting from a clique on m + 1.
struct ScaleFreeModel {
  std::size_t n = 0;
  std::size_t m = 1;
};

// Ring lattice of even degree k, every lattice edge rewired with
// probability beta.
struct SmallWorldModel {
  std::size_t n = 0;
  std::size_t k = 2;
  double beta = 0.0;
};

struct GeneratorSpec {
  std::variant<RandomModel, ScaleFreeModel, SmallWorldModel> model;
  std::uint64_t seed = 0;
};

/// The PRNG behind every generator. std::mt19937_64 has a fully specified
/// output sequence; the helpers below avoid the implementation-defined
/// standard distributions so corpora are identical across platforms.
inline constexpr const char* kGeneratorPrng = "mt19937_64";

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

inline std::string model_name(const GeneratorSpec& spec) {
  struct {
    std::string operator()(const RandomModel&) const { return "random"; }
    std::string operator()(const ScaleFreeModel&) const { return "scale-free"; }
    std::string operator()(const SmallWorldModel&) const { return "small-world"; }
  } visitor;
  return std::visit(visitor, spec.model);
}

inline void validate(const GeneratorSpec& spec) {
  struct {
    void operator()(const RandomModel& m) const {
      if (m.n == 0) throw ConfigError("random: n must be positive");
      if (!(m.p >= 0.0 && m.p <= 1.0)) throw ConfigError("random: p must lie in [0,1]");
    }
    void operator()(const ScaleFreeModel& m) const {
      if (m.m < 1) throw ConfigError("scale-free: m must be >= 1");
      if (m.n <= m.m) throw ConfigError("scale-free: n must exceed m");
    }
    void operator()(const SmallWorldModel& m) const {
      if (m.k % 2 != 0) throw ConfigError("small-world: k must be even");
      if (m.k >= m.n) throw ConfigError("small-world: k must be smaller than n");
      if (!(m.beta >= 0.0 && m.beta <= 1.0)) throw ConfigError("small-world: beta must lie in [0,1]");
    }
  } visitor;
  std::visit(visitor, spec.model);
}

namespace detail {

// Zero-padded decimal labels keep lexicographic order equal to numeric order.
inline std::vector<std::string> numeric_labels(std::size_t n) {
  const std::size_t width = std::to_string(n == 0 ? 0 : n - 1).size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string s = std::to_string(i);
    labels.push_back(std::string(width - s.size(), '0') + s);
  }
  return labels;
}

inline std::vector<Edge> random_edges(const RandomModel& m, SeededRng& rng) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < m.n; ++i)
    for (NodeId j = i + 1; j < m.n; ++j)
      if (rng.uniform() < m.p) edges.emplace_back(i, j);
  return edges;
}

inline std::vector<Edge> scale_free_edges(const ScaleFreeModel& m, SeededRng& rng) {
  std::vector<Edge> edges;
  // Every edge endpoint appears once here, so uniform picks are degree-biased.
  std::vector<NodeId> endpoints;
  for (NodeId i = 0; i <= m.m; ++i)
    for (NodeId j = i + 1; j <= m.m; ++j) {
      edges.emplace_back(i, j);
      endpoints.push_back(i);
      endpoints.push_back(j);
    }
  std::vector<NodeId> targets;
  for (NodeId v = static_cast<NodeId>(m.m + 1); v < m.n; ++v) {
    targets.clear();
    while (targets.size() < m.m) {
      const NodeId t = endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (NodeId t : targets) {
      edges.emplace_back(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return edges;
}

inline std::vector<Edge> small_world_edges(const SmallWorldModel& m, SeededRng& rng) {
  const std::size_t n = m.n;
  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  std::vector<Edge> lattice;
  for (NodeId i = 0; i < n; ++i)
    for (std::size_t j = 1; j <= m.k / 2; ++j) {
      const auto t = static_cast<NodeId>((i + j) % n);
      lattice.emplace_back(i, t);
      present[i][t] = present[t][i] = true;
    }
  for (auto& [u, v] : lattice) {
    if (rng.uniform() >= m.beta) continue;
    std::size_t degree_u = 0;
    for (bool b : present[u]) degree_u += b;
    if (degree_u >= n - 1) continue;  // u already adjacent to everyone
    NodeId w;
    do {
      w = static_cast<NodeId>(rng.below(n));
    } while (w == u || present[u][w]);
    present[u][v] = present[v][u] = false;
    present[u][w] = present[w][u] = true;
    v = w;
  }
  return lattice;
}

}  // namespace detail

/// Deterministic in `spec`: the same spec always yields the same graph.
inline Graph generate(const GeneratorSpec& spec) {
  validate(spec);
  SeededRng rng(spec.seed);
  struct {
    SeededRng& rng;
    std::pair<std::size_t, std::vector<Edge>> operator()(const RandomModel& m) const {
      return {m.n, detail::random_edges(m, rng)};
    }
    std::pair<std::size_t, std::vector<Edge>> operator()(const ScaleFreeModel& m) const {
      return {m.n, detail::scale_free_edges(m, rng)};
    }
    std::pair<std::size_t, std::vector<Edge>> operator()(const SmallWorldModel& m) const {
      return {m.n, detail::small_world_edges(m, rng)};
    }
  } visitor{rng};
  auto [n, edges] = std::visit(visitor, spec.model);
  return Graph::from_edges(detail::numeric_labels(n), edges);
}

}  // namespace centrafactor
