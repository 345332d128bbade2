#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "centrafactor/error.hpp"

namespace centrafactor {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Simple undirected graph. Node ids follow lexicographic label order, so
/// every derived output is independent of input line order.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from arbitrary labels and edges given as indices into
  /// `labels`. Labels must be unique. Self-loops and parallel edges are
  /// dropped. Ids are reassigned by sorted label order.
  static Graph from_edges(std::vector<std::string> labels, const std::vector<Edge>& edges) {
    const std::size_t n = labels.size();
    std::vector<NodeId> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<NodeId>(i);
    std::sort(order.begin(), order.end(),
              [&](NodeId a, NodeId b) { return labels[a] < labels[b]; });
    std::vector<NodeId> remap(n);
    Graph g;
    g.labels_.reserve(n);
    for (std::size_t rank = 0; rank < n; ++rank) {
      remap[order[rank]] = static_cast<NodeId>(rank);
      g.labels_.push_back(std::move(labels[order[rank]]));
    }
    for (std::size_t i = 1; i < n; ++i) {
      if (g.labels_[i - 1] == g.labels_[i])
        throw ContractViolation("duplicate node label '" + g.labels_[i] + "'");
    }
    g.adj_.assign(n, {});
    for (const auto& [a, b] : edges) {
      if (a >= n || b >= n) throw ContractViolation("edge endpoint out of range");
      if (a == b) continue;
      g.adj_[remap[a]].push_back(remap[b]);
      g.adj_[remap[b]].push_back(remap[a]);
    }
    for (auto& nbrs : g.adj_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return g;
  }

  std::size_t node_count() const noexcept { return labels_.size(); }

  std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& nbrs : adj_) twice += nbrs.size();
    return twice / 2;
  }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(NodeId v) const { return labels_.at(v); }
  const std::vector<NodeId>& neighbors(NodeId v) const { return adj_.at(v); }
  std::size_t degree(NodeId v) const { return adj_.at(v).size(); }

  /// Edges with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (NodeId u = 0; u < adj_.size(); ++u)
      for (NodeId v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<NodeId>> adj_;
};

/// Checks the structural invariants: symmetric sorted adjacency without
/// self-loops, duplicates or out-of-range ids, and sorted unique labels.
/// Returns an empty string when valid, otherwise the first violation.
inline std::string validate(const Graph& g) {
  const std::size_t n = g.node_count();
  for (std::size_t i = 1; i < n; ++i)
    if (!(g.labels()[i - 1] < g.labels()[i])) return "labels not strictly sorted at " + std::to_string(i);
  for (NodeId u = 0; u < n; ++u) {
    const auto& nbrs = g.neighbors(u);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const NodeId v = nbrs[k];
      if (v >= n) return "neighbor out of range at node " + std::to_string(u);
      if (v == u) return "self-loop at node " + std::to_string(u);
      if (k > 0 && nbrs[k - 1] >= v) return "adjacency unsorted or duplicated at node " + std::to_string(u);
      const auto& back = g.neighbors(v);
      if (!std::binary_search(back.begin(), back.end(), u))
        return "asymmetric edge " + std::to_string(u) + "-" + std::to_string(v);
    }
  }
  return {};
}

struct EdgeListDiagnostics {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_collapsed = 0;

  bool operator==(const EdgeListDiagnostics&) const = default;
};

struct ParsedEdgeList {
  Graph graph;
  EdgeListDiagnostics diagnostics;
};

/// Reads a whitespace- or comma-separated edge list. `#` starts a comment
/// line. Lines holding a self-loop do not create nodes.
inline ParsedEdgeList parse_edge_list(std::istream& in) {
  std::map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  EdgeListDiagnostics diag;

  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  bool saw_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream tokens(line);
    std::vector<std::string> fields;
    for (std::string tok; tokens >> tok;) fields.push_back(tok);
    if (fields.empty() || fields.front().starts_with('#')) continue;
    saw_content = true;
    if (fields.size() != 2)
      throw ParseError(line_no, "expected 2 node labels, found " + std::to_string(fields.size()));
    if (fields[0] == fields[1]) {
      ++diag.self_loops_dropped;
      continue;
    }
    NodeId a = intern(fields[0]);
    NodeId b = intern(fields[1]);
    if (a > b) std::swap(a, b);
    edges.emplace_back(a, b);
  }
  if (!saw_content) throw ParseError(0, "empty edge list");
  if (labels.empty()) throw ParseError(0, "edge list contains no edges besides self-loops");

  std::sort(edges.begin(), edges.end());
  const auto unique_end = std::unique(edges.begin(), edges.end());
  diag.duplicates_collapsed = static_cast<std::size_t>(edges.end() - unique_end);
  edges.erase(unique_end, edges.end());

  return {Graph::from_edges(std::move(labels), edges), diag};
}

inline ParsedEdgeList parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

/// Canonical edge-list form: count header, then one sorted label pair per
/// line. Isolated nodes have no representation and are not emitted.
inline std::string serialize_edge_list(const Graph& g) {
  std::string out = "# nodes " + std::to_string(g.node_count()) + " edges " +
                    std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += g.label(u);
    out += ' ';
    out += g.label(v);
    out += '\n';
  }
  return out;
}

/// Component index per node, numbered in order of each component's
/// smallest node id.
inline std::vector<std::size_t> component_ids(const Graph& g, std::size_t* count = nullptr) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(g.node_count(), unset);
  std::vector<NodeId> stack;
  std::size_t next = 0;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (comp[s] != unset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : g.neighbors(u)) {
        if (comp[v] == unset) {
          comp[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

inline bool is_connected(const Graph& g) {
  std::size_t count = 0;
  component_ids(g, &count);
  return count <= 1;
}

/// Induced subgraph on the largest component. Equal-sized components are
/// resolved in favour of the one holding the smallest label.
inline Graph largest_connected_component(const Graph& g) {
  if (g.node_count() == 0) throw ContractViolation("largest_connected_component of an empty graph");
  std::size_t count = 0;
  const auto comp = component_ids(g, &count);
  if (count == 1) return g;
  std::vector<std::size_t> sizes(count, 0);
  for (std::size_t c : comp) ++sizes[c];
  // Components are numbered by smallest id, i.e. smallest label, so the
  // first maximum wins ties.
  const std::size_t best =
      static_cast<std::size_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

  std::vector<NodeId> new_id(g.node_count(), 0);
  std::vector<std::string> labels;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (comp[v] != best) continue;
    new_id[v] = static_cast<NodeId>(labels.size());
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (comp[u] == best) edges.emplace_back(new_id[u], new_id[v]);
  return Graph::from_edges(std::move(labels), edges);
}

}  // namespace centrafactor
