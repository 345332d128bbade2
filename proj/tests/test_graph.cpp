#include <gtest/gtest.h>

#include <random>

#include "centrafactor/generate.hpp"
#include "centrafactor/graph.hpp"
#include "centrafactor/manifest.hpp"

using namespace centrafactor;

namespace {

std::vector<std::string> neighbor_labels(const Graph& g, const std::string& label) {
  const auto& labels = g.labels();
  const auto id = static_cast<NodeId>(std::find(labels.begin(), labels.end(), label) - labels.begin());
  std::vector<std::string> out;
  for (NodeId v : g.neighbors(id)) out.push_back(g.label(v));
  return out;
}

}  // namespace

TEST(ParseEdgeList, PathGraph) {
  const auto parsed = parse_edge_list("a b\nb c");
  const Graph& g = parsed.graph;
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(neighbor_labels(g, "b"), (std::vector<std::string>{"a", "c"}));
  EXPECT_EQ(validate(g), "");
}

TEST(ParseEdgeList, DropsSelfLoopsAndDuplicates) {
  const auto parsed = parse_edge_list("a b\nb a\na a");
  EXPECT_EQ(parsed.graph.node_count(), 2u);
  EXPECT_EQ(parsed.graph.edge_count(), 1u);
  EXPECT_EQ(parsed.diagnostics.self_loops_dropped, 1u);
  EXPECT_EQ(parsed.diagnostics.duplicates_collapsed, 1u);
}

TEST(ParseEdgeList, MalformedLineReportsLineNumber) {
  try {
    parse_edge_list("x");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
  try {
    parse_edge_list("# header\na b\na b c\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ParseEdgeList, EmptyInputIsAnError) {
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("# only a comment\n\n"), ParseError);
  EXPECT_THROW(parse_edge_list("a a\n"), ParseError);
}

TEST(ParseEdgeList, AcceptsCommasCrlfAndComments) {
  const auto parsed = parse_edge_list("# nodes 3\r\nc,a\r\n\r\nb, c\r\n");
  EXPECT_EQ(parsed.graph.labels(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(parsed.graph.edge_count(), 2u);
}

TEST(ParseEdgeList, LineOrderDoesNotMatter) {
  EXPECT_EQ(parse_edge_list("z y\ny x\nx w").graph, parse_edge_list("x w\nw x\ny z\nx y").graph);
}

TEST(EdgeListRoundTrip, SerializeThenParseIsIdentity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = generate({ScaleFreeModel{20 + static_cast<std::size_t>(trial), 2}, rng()});
    const std::string text = serialize_edge_list(g);
    const auto back = parse_edge_list(text);
    EXPECT_EQ(back.graph, g);
    EXPECT_EQ(serialize_edge_list(back.graph), text);
  }
}

TEST(LargestConnectedComponent, DropsIsolatedNode) {
  const Graph g = Graph::from_edges({"a", "b", "c", "d"}, {{0, 1}, {1, 2}});
  const Graph lcc = largest_connected_component(g);
  EXPECT_EQ(lcc.labels(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(lcc.edge_count(), 2u);
  EXPECT_EQ(validate(lcc), "");
}

TEST(LargestConnectedComponent, ConnectedGraphUnchanged) {
  const Graph g = parse_edge_list("a b\nb c\nc a\nc d").graph;
  EXPECT_EQ(largest_connected_component(g), g);
}

TEST(LargestConnectedComponent, TieGoesToSmallestLabel) {
  const Graph g = parse_edge_list("c d\na b").graph;
  EXPECT_EQ(largest_connected_component(g).labels(), (std::vector<std::string>{"a", "b"}));
}

TEST(Generate, RandomExtremes) {
  const Graph empty = generate({RandomModel{10, 0.0}, 3});
  EXPECT_EQ(empty.node_count(), 10u);
  EXPECT_EQ(empty.edge_count(), 0u);
  const Graph full = generate({RandomModel{5, 1.0}, 3});
  EXPECT_EQ(full.edge_count(), 10u);
}

TEST(Generate, ScaleFreeIsDeterministic) {
  const GeneratorSpec spec{ScaleFreeModel{50, 2}, 7};
  const Graph a = generate(spec);
  const Graph b = generate(spec);
  EXPECT_EQ(serialize_edge_list(a), serialize_edge_list(b));
  EXPECT_EQ(a, b);
  // m + 1 clique plus m edges per later node.
  EXPECT_EQ(a.edge_count(), 3u + 2u * 47u);
  EXPECT_NE(generate({ScaleFreeModel{50, 2}, 8}), a);
}

TEST(Generate, SmallWorldKeepsEdgeCount) {
  for (double beta : {0.0, 0.2, 1.0}) {
    const Graph g = generate({SmallWorldModel{60, 4, beta}, 5});
    EXPECT_EQ(g.edge_count(), 120u);
    EXPECT_EQ(validate(g), "");
  }
  const Graph ring = generate({SmallWorldModel{10, 2, 0.0}, 1});
  for (NodeId v = 0; v < 10; ++v) EXPECT_EQ(ring.degree(v), 2u);
}

TEST(Generate, LabelsSortNumerically) {
  const Graph g = generate({RandomModel{12, 0.5}, 1});
  EXPECT_EQ(g.label(0), "00");
  EXPECT_EQ(g.label(11), "11");
}

TEST(Generate, RejectsInvalidParameters) {
  EXPECT_THROW(generate({RandomModel{10, 1.5}, 1}), ConfigError);
  EXPECT_THROW(generate({ScaleFreeModel{3, 3}, 1}), ConfigError);
  EXPECT_THROW(generate({ScaleFreeModel{10, 0}, 1}), ConfigError);
  EXPECT_THROW(generate({SmallWorldModel{10, 3, 0.1}, 1}), ConfigError);
  EXPECT_THROW(generate({SmallWorldModel{10, 10, 0.1}, 1}), ConfigError);
  EXPECT_THROW(generate({SmallWorldModel{10, 4, -0.1}, 1}), ConfigError);
}

TEST(GraphInvariants, HoldForEveryGeneratedGraph) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    GeneratorSpec spec;
    spec.seed = rng();
    const std::size_t n = 10 + rng() % 80;
    switch (trial % 3) {
      case 0: spec.model = RandomModel{n, 0.05 + 0.3 * static_cast<double>(rng() % 100) / 100.0}; break;
      case 1: spec.model = ScaleFreeModel{n, 1 + rng() % 4}; break;
      default: spec.model = SmallWorldModel{n, 2 + 2 * (rng() % 3), static_cast<double>(rng() % 100) / 100.0};
    }
    const Graph g = generate(spec);
    ASSERT_EQ(validate(g), "") << model_name(spec) << " seed " << spec.seed;
    ASSERT_EQ(validate(largest_connected_component(g)), "");
    ASSERT_EQ(generate(spec), g);
  }
}

TEST(GeneratorSpecText, ParsesAllModels) {
  const auto r = parse_generator_spec("random:n=100,p=0.05:7");
  EXPECT_EQ(r.seed, 7u);
  EXPECT_EQ(std::get<RandomModel>(r.model).n, 100u);
  EXPECT_DOUBLE_EQ(std::get<RandomModel>(r.model).p, 0.05);
  const auto s = parse_generator_spec("scale-free:n=200,m=2", 9);
  EXPECT_EQ(s.seed, 9u);
  EXPECT_EQ(std::get<ScaleFreeModel>(s.model).m, 2u);
  const auto w = parse_generator_spec("small-world:n=100,k=4,beta=0.1:3");
  EXPECT_DOUBLE_EQ(std::get<SmallWorldModel>(w.model).beta, 0.1);
  EXPECT_THROW(parse_generator_spec("random:n=10:1"), ConfigError);
  EXPECT_THROW(parse_generator_spec("random:n=10,p=0.1,q=2:1"), ConfigError);
  EXPECT_THROW(parse_generator_spec("lattice:n=10:1"), ConfigError);
  EXPECT_THROW(parse_generator_spec("random:n=ten,p=0.1:1"), ConfigError);
}

TEST(Manifest, MixesPathsAndGenerators) {
  std::istringstream in("# corpus\nnets/a.edges\n\ngen:random:n=30,p=0.2:4\n/abs/b.txt\n");
  const auto sources = parse_manifest(in, "/data");
  ASSERT_EQ(sources.size(), 3u);
  EXPECT_EQ(std::get<std::filesystem::path>(sources[0].origin), std::filesystem::path("/data/nets/a.edges"));
  EXPECT_EQ(sources[1].name, "gen:random:n=30,p=0.2:4");
  EXPECT_EQ(std::get<GeneratorSpec>(sources[1].origin).seed, 4u);
  EXPECT_EQ(std::get<std::filesystem::path>(sources[2].origin), std::filesystem::path("/abs/b.txt"));
  std::istringstream bad("gen:random:n=3:1\n");
  EXPECT_THROW(parse_manifest(bad), ConfigError);
}
