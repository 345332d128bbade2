#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <queue>
#include <string>
#include <vector>

#include "centrafactor/error.hpp"
#include "centrafactor/graph.hpp"
#include "centrafactor/linalg.hpp"

namespace centrafactor {

enum class Metric : std::size_t { Deg = 0, Evc = 1, Bwc = 2, Clc = 3 };

inline constexpr std::size_t kMetricCount = 4;
inline const std::array<std::string, kMetricCount> kMetricNames{"deg", "evc", "bwc", "clc"};

inline std::vector<double> degree_centrality(const Graph& g) {
  std::vector<double> out(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) out[v] = static_cast<double>(g.degree(v));
  return out;
}

struct PowerIterationOptions {
  double tol = 1e-10;
  int max_iter = 1000;
};

/// Principal adjacency eigenvector, unit L2 norm, nonnegative.
///
/// Iterates x <- (A + I)x from the all-ones vector. The unit shift has the
/// same eigenvectors as A but breaks the ±λ tie of bipartite graphs, which
/// would otherwise make plain power iteration oscillate. Stops when
/// successive normalized iterates differ by less than `tol` in max-norm.
inline std::vector<double> eigenvector_centrality(const Graph& g, PowerIterationOptions opts = {}) {
  const std::size_t n = g.node_count();
  if (n == 0) throw ContractViolation("eigenvector_centrality of an empty graph");
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> next(n);
  double diff = 0.0;
  for (int iter = 0; iter < opts.max_iter; ++iter) {
    double norm2 = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      double s = x[v];
      for (NodeId u : g.neighbors(v)) s += x[u];
      next[v] = s;
      norm2 += s * s;
    }
    const double norm = std::sqrt(norm2);
    diff = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      next[v] /= norm;
      diff = std::max(diff, std::abs(next[v] - x[v]));
    }
    x.swap(next);
    if (diff < opts.tol) return x;
  }
  throw NumericalError("eigenvector centrality power iteration did not converge in " +
                           std::to_string(opts.max_iter) + " iterations",
                       diff);
}

/// Raw betweenness (Brandes): for each v, the sum over unordered pairs
/// {s, t} not containing v of σ_st(v) / σ_st. Unreachable pairs add 0.
inline std::vector<double> betweenness_centrality(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> bc(n, 0.0);
  std::vector<NodeId> order;
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<long> dist(n);
  order.reserve(n);
  for (NodeId s = 0; s < n; ++s) {
    order.clear();
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    sigma[s] = 1.0;
    dist[s] = 0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId v = order[head];
      for (NodeId w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    // Predecessors of w are exactly the neighbors one layer closer to s.
    for (std::size_t k = order.size(); k-- > 1;) {
      const NodeId w = order[k];
      for (NodeId v : g.neighbors(w))
        if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      bc[w] += delta[w];
    }
  }
  // Every unordered pair was visited from both endpoints.
  for (double& b : bc) b /= 2.0;
  return bc;
}

/// BFS hop distances from `source`; -1 marks unreachable nodes.
inline std::vector<long> bfs_distances(const Graph& g, NodeId source) {
  std::vector<long> dist(g.node_count(), -1);
  std::vector<NodeId> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    for (NodeId w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

/// (n - 1) / Σ_u d(v, u). Requires a connected graph with n >= 2.
inline std::vector<double> closeness_centrality(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n < 2) throw ContractViolation("closeness_centrality needs at least 2 nodes");
  std::vector<double> out(n);
  for (NodeId v = 0; v < n; ++v) {
    long total = 0;
    for (long d : bfs_distances(g, v)) {
      if (d < 0) throw DisconnectedGraph();
      total += d;
    }
    out[v] = static_cast<double>(n - 1) / static_cast<double>(total);
  }
  return out;
}

/// n×4 per-vertex metric values, columns (DEG, EVC, BWC, CLC), rows
/// aligned with graph node ids.
struct CentralityDataset {
  std::vector<std::string> labels;
  Matrix values;

  std::vector<double> column(Metric m) const { return values.column(static_cast<std::size_t>(m)); }
};

inline CentralityDataset centrality_dataset(const Graph& g, PowerIterationOptions evc = {}) {
  const std::size_t n = g.node_count();
  if (n < 5) throw ContractViolation("centrality dataset needs at least 5 nodes, got " + std::to_string(n));
  if (!is_connected(g)) throw DisconnectedGraph();
  const std::array<std::vector<double>, kMetricCount> columns{
      degree_centrality(g), eigenvector_centrality(g, evc), betweenness_centrality(g),
      closeness_centrality(g)};
  CentralityDataset d{g.labels(), Matrix(n, kMetricCount)};
  for (std::size_t c = 0; c < kMetricCount; ++c) d.values.set_column(c, columns[c]);
  return d;
}

/// `node,deg,evc,bwc,clc` with 17 significant digits.
inline std::string to_csv(const CentralityDataset& d) {
  std::string out = "node,deg,evc,bwc,clc\n";
  char buf[40];
  for (std::size_t r = 0; r < d.values.rows(); ++r) {
    out += d.labels[r];
    for (std::size_t c = 0; c < kMetricCount; ++c) {
      std::snprintf(buf, sizeof buf, ",%.17g", d.values(r, c));
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace centrafactor
