#pragma once

// Test-only reference implementations. Everything here is deliberately
// naive and shares no code path with the library routines it checks.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "centrafactor/graph.hpp"
#include "centrafactor/linalg.hpp"

namespace oracle {

using centrafactor::Graph;
using centrafactor::Matrix;
using centrafactor::NodeId;

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (NodeId j : g.neighbors(static_cast<NodeId>(i))) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

/// Enumerates every shortest path for every unordered pair and counts,
/// per interior vertex, the fraction of paths through it.
inline std::vector<double> brute_force_betweenness(const Graph& g) {
  const std::size_t n = g.node_count();
  const auto d = floyd_warshall(g);
  std::vector<double> bc(n, 0.0);
  for (NodeId s = 0; s < n; ++s)
    for (NodeId t = s + 1; t < n; ++t) {
      if (d[s][t] >= kInf) continue;
      std::vector<std::vector<NodeId>> paths;
      std::vector<NodeId> path{s};
      std::function<void(NodeId)> walk = [&](NodeId u) {
        if (u == t) {
          paths.push_back(path);
          return;
        }
        for (NodeId w : g.neighbors(u)) {
          if (d[s][w] == d[s][u] + 1 && d[w][t] == d[s][t] - d[s][w]) {
            path.push_back(w);
            walk(w);
            path.pop_back();
          }
        }
      };
      walk(s);
      for (const auto& p : paths)
        for (std::size_t k = 1; k + 1 < p.size(); ++k) bc[p[k]] += 1.0 / static_cast<double>(paths.size());
    }
  return bc;
}

inline bool connected(const Graph& g) {
  const auto d = floyd_warshall(g);
  for (const auto& row : d)
    for (int x : row)
      if (x >= kInf) return false;
  return true;
}

/// Connected G(n, p) samples by rejection; labels "a", "b", ...
inline Graph random_connected_graph(std::mt19937_64& rng, std::size_t n_min, std::size_t n_max) {
  std::uniform_int_distribution<std::size_t> size(n_min, n_max);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  while (true) {
    const std::size_t n = size(rng);
    const double p = 0.2 + 0.7 * unit(rng);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("n" + std::to_string(1000 + i));
    std::vector<centrafactor::Edge> edges;
    for (NodeId i = 0; i < n; ++i)
      for (NodeId j = i + 1; j < n; ++j)
        if (unit(rng) < p) edges.emplace_back(i, j);
    Graph g = Graph::from_edges(labels, edges);
    if (n == 1 || connected(g)) return g;
  }
}

inline Matrix adjacency_matrix(const Graph& g) {
  Matrix a(g.node_count(), g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u)
    for (NodeId v : g.neighbors(u)) a(u, v) = 1.0;
  return a;
}

/// Textbook two-pass Pearson correlation (sample form; the n−1 cancels).
inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

/// Varimax criterion computed from scratch on explicit columns.
inline double varimax_value(const std::vector<std::vector<double>>& rows) {
  const std::size_t p = rows.size(), m = rows.front().size();
  double total = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    double mean2 = 0, mean4 = 0;
    for (const auto& r : rows) {
      mean2 += std::pow(r[j], 2) / static_cast<double>(p);
      mean4 += std::pow(r[j], 4) / static_cast<double>(p);
    }
    total += mean4 - mean2 * mean2;
  }
  return total;
}

/// Best varimax criterion of a p×2 loading matrix over rotation angles on a
/// grid of `step_deg` degrees. The criterion has period 90°.
inline double varimax_grid_max(const Matrix& l, double step_deg = 0.01) {
  const double pi = std::acos(-1.0);
  double best = -1.0;
  const int steps = static_cast<int>(std::lround(90.0 / step_deg));
  std::vector<std::vector<double>> rows(l.rows(), std::vector<double>(2));
  for (int s = 0; s < steps; ++s) {
    const double phi = s * step_deg * pi / 180.0;
    const double c = std::cos(phi), sn = std::sin(phi);
    for (std::size_t i = 0; i < l.rows(); ++i) {
      rows[i][0] = c * l(i, 0) - sn * l(i, 1);
      rows[i][1] = sn * l(i, 0) + c * l(i, 1);
    }
    best = std::max(best, varimax_value(rows));
  }
  return best;
}

/// max over unit weights a(θ), b(φ) of |corr(X a, Y b)| on a grid of
/// `step_deg`, using covariances computed directly from the raw columns.
inline double cca_grid_max(const Matrix& x, const Matrix& y, double step_deg = 0.1) {
  const std::size_t n = x.rows();
  auto cov = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double ma = 0, mb = 0;
    for (std::size_t i = 0; i < n; ++i) {
      ma += a[i];
      mb += b[i];
    }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += (a[i] - ma) * (b[i] - mb);
    return s / static_cast<double>(n);
  };
  const std::vector<std::vector<double>> xs{x.column(0), x.column(1)}, ys{y.column(0), y.column(1)};
  double cxx[2][2], cyy[2][2], cxy[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      cxx[i][j] = cov(xs[i], xs[j]);
      cyy[i][j] = cov(ys[i], ys[j]);
      cxy[i][j] = cov(xs[i], ys[j]);
    }
  const double pi = std::acos(-1.0);
  const int steps = static_cast<int>(std::lround(180.0 / step_deg));
  std::vector<double> ca(steps), sa(steps);
  for (int s = 0; s < steps; ++s) {
    ca[s] = std::cos(s * step_deg * pi / 180.0);
    sa[s] = std::sin(s * step_deg * pi / 180.0);
  }
  double best = 0.0;
  for (int s = 0; s < steps; ++s) {
    const double a0 = ca[s], a1 = sa[s];
    const double vx = a0 * a0 * cxx[0][0] + 2 * a0 * a1 * cxx[0][1] + a1 * a1 * cxx[1][1];
    const double u0 = a0 * cxy[0][0] + a1 * cxy[1][0];
    const double u1 = a0 * cxy[0][1] + a1 * cxy[1][1];
    for (int t = 0; t < steps; ++t) {
      const double b0 = ca[t], b1 = sa[t];
      const double vy = b0 * b0 * cyy[0][0] + 2 * b0 * b1 * cyy[0][1] + b1 * b1 * cyy[1][1];
      best = std::max(best, std::abs(u0 * b0 + u1 * b1) / std::sqrt(vx * vy));
    }
  }
  return best;
}

inline Matrix random_symmetric(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = u(rng);
  return a;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  Matrix a(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a(i, j) = u(rng);
  return a;
}

/// Random loading matrix whose rows have norm below 1 (valid communalities).
inline Matrix random_loadings(std::mt19937_64& rng, std::size_t p, std::size_t m) {
  std::uniform_real_distribution<double> u(-1.0, 1.0), radius(0.2, 0.999);
  Matrix l(p, m);
  for (std::size_t i = 0; i < p; ++i) {
    double norm = 0;
    for (std::size_t j = 0; j < m; ++j) {
      l(i, j) = u(rng);
      norm += l(i, j) * l(i, j);
    }
    const double r = radius(rng) / std::sqrt(norm);
    for (std::size_t j = 0; j < m; ++j) l(i, j) *= r;
  }
  return l;
}

// Four correlated columns: two latent drivers plus noise.
inline Matrix correlated_data(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> z(0.0, 1.0);
  std::uniform_real_distribution<double> w(-1.0, 1.0);
  double mix[4][2];
  for (auto& row : mix)
    for (double& x : row) x = w(rng);
  Matrix d(n, 4);
  for (std::size_t r = 0; r < n; ++r) {
    const double f0 = z(rng), f1 = z(rng);
    for (std::size_t c = 0; c < 4; ++c) d(r, c) = mix[c][0] * f0 + mix[c][1] * f1 + 0.5 * z(rng);
  }
  return d;
}

}  // namespace oracle
