#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "hcolor/catalog.hpp"
#include "hcolor/formats.hpp"
#include "hcolor/solver.hpp"
#include "oracles.hpp"

using namespace hcolor;
using namespace hcolor::formats;
using catalog::Name;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no hcolor::Error thrown";
  return Errc::EmptyGraph;
}

MultiGraph canonical(const MultiGraph& g) { return canonical_edge_order(g).first; }

TEST(Graph6, K4) {
  const auto g = parse_graph6("C~");
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_TRUE(oracle::isomorphic(g, catalog::named(Name::K4).graph));
  EXPECT_EQ(write_graph6(catalog::named(Name::K4).graph), "C~");
  EXPECT_EQ(parse_graph6(">>graph6<<C~\n"), g);
}

TEST(Graph6, KnownEncodings) {
  // Petersen in nauty's labelling, and the empty graph on 0 and 1 vertices.
  const auto p = parse_graph6("IheA@GUAo");
  EXPECT_EQ(p.edge_count(), 15u);
  EXPECT_TRUE(oracle::isomorphic(p, catalog::named(Name::P).graph));
  EXPECT_EQ(parse_graph6("?").vertex_count(), 0u);
  EXPECT_EQ(write_graph6(MultiGraph::build(1, {})), "@");
}

TEST(Graph6, LargeVertexCountHeader) {
  const auto g = MultiGraph::build(70, {{0, 69}});
  const auto text = write_graph6(g);
  EXPECT_EQ(text.substr(0, 4), std::string("~?@E"));
  EXPECT_EQ(canonical(parse_graph6(text)), canonical(g));
}

TEST(Graph6, Malformed) {
  EXPECT_EQ(code_of([] { parse_graph6("C"); }), Errc::MalformedEncoding);
  EXPECT_EQ(code_of([] { parse_graph6("C~~"); }), Errc::MalformedEncoding);
  EXPECT_EQ(code_of([] { parse_graph6("C\x01"); }), Errc::MalformedEncoding);
  EXPECT_EQ(code_of([] { parse_graph6(""); }), Errc::MalformedEncoding);
  EXPECT_EQ(code_of([] { write_graph6(catalog::named(Name::S10).graph); }), Errc::MalformedEncoding);
}

TEST(Graph6, PropertyRoundTripSimpleGraphs) {
  std::mt19937 rng(29);
  for (int round = 0; round < 300; ++round) {
    std::uniform_int_distribution<std::size_t> pick_n(1, 12);
    const auto n = pick_n(rng);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId j = 1; j < n; ++j) {
      for (VertexId i = 0; i < j; ++i) {
        if (rng() % 3 == 0) pairs.emplace_back(i, j);
      }
    }
    const auto g = MultiGraph::build(n, pairs);
    EXPECT_EQ(canonical(parse_graph6(write_graph6(g))), canonical(g));
  }
}

TEST(Sparse6, ReferenceExample) {
  // The worked example from the nauty format notes.
  const auto g = MultiGraph::build(7, {{0, 1}, {0, 2}, {1, 2}, {5, 6}});
  EXPECT_EQ(write_sparse6(g), ":Fa@x^");
  EXPECT_EQ(parse_sparse6(":Fa@x^"), g);
}

TEST(Sparse6, PaddingGuardForPowerOfTwoOrders) {
  // n = 4: vertex n-2 has an edge, n-1 has none; plain 1-padding would decode a loop.
  const auto g = MultiGraph::build(4, {{0, 2}, {1, 2}});
  const auto text = write_sparse6(g);
  EXPECT_EQ(parse_sparse6(text), g);
  const auto two = MultiGraph::build(2, {{0, 1}, {0, 1}});
  EXPECT_EQ(parse_sparse6(write_sparse6(two)), two);
}

TEST(Sparse6, CatalogRoundTrip) {
  for (auto name : catalog::all_names()) {
    const auto g = catalog::named(name).graph;
    const auto text = write_sparse6(g);
    ASSERT_EQ(text.front(), ':');
    EXPECT_EQ(parse_sparse6(text), canonical(g)) << catalog::to_string(name);
  }
  const auto s10 = parse_sparse6(write_sparse6(catalog::named(Name::S10).graph));
  EXPECT_EQ(two_circuit_edges(s10).size(), 6u);
  const auto gs = parse_sparse6(write_sparse6(catalog::build_g_star().graph));
  EXPECT_EQ(gs.vertex_count(), 24u);
  EXPECT_EQ(gs.edge_count(), 36u);
}

TEST(Sparse6, PropertyRoundTripRandomMultigraphs) {
  std::mt19937 rng(31);
  for (int round = 0; round < 1000; ++round) {
    const auto g = oracle::random_multigraph(rng, 12, 20);
    ASSERT_EQ(parse_sparse6(write_sparse6(g)), canonical(g)) << round;
  }
}

TEST(Sparse6, Errors) {
  // n = 2, one edge (1,1): b=1 v=1, x=1 -> loop. Bits 1 1 1111 -> '~'.
  EXPECT_EQ(code_of([] { parse_sparse6(":A~"); }), Errc::LoopRejected);
  EXPECT_EQ(code_of([] { parse_sparse6("A~"); }), Errc::MalformedEncoding);
  EXPECT_EQ(code_of([] { parse_sparse6(":"); }), Errc::MalformedEncoding);
  EXPECT_EQ(code_of([] { parse_sparse6(":A\x7f"); }), Errc::MalformedEncoding);
}

TEST(EdgeList, RoundTripAndErrors) {
  const auto g = catalog::named(Name::S10).graph;
  EXPECT_EQ(parse_edge_list(write_edge_list(g)), g);
  EXPECT_EQ(parse_graph_text("c comment\n" + write_edge_list(g)), g);
  EXPECT_EQ(code_of([] { parse_edge_list("2 2\n0 1\n"); }), Errc::MalformedEncoding);
  EXPECT_EQ(code_of([] { parse_edge_list("2 1\n0 x\n"); }), Errc::MalformedEncoding);
  EXPECT_EQ(code_of([] { parse_edge_list("2 1\n1 1\n"); }), Errc::LoopRejected);
}

TEST(GraphText, DetectsFormat) {
  EXPECT_EQ(parse_graph_text("C~\n").edge_count(), 6u);
  EXPECT_EQ(parse_graph_text(":Fa@x^\n").edge_count(), 4u);
  std::istringstream in("c header\nC~\n\n:Fa@x^\n");
  EXPECT_EQ(graph_lines(in), (std::vector<std::string>{"C~", ":Fa@x^"}));
}

TEST(Certificate, IdentityRoundTrip) {
  const auto p = share(catalog::named(Name::P).graph);
  const auto f = identity_mapping(p);
  const auto text = write_certificate(make_certificate(f, "P", "P"));
  EXPECT_NE(text.find("graph @P\n"), std::string::npos);
  const auto back = read_certificate(text);
  EXPECT_EQ(back.image, f.image);
  EXPECT_EQ(*back.source, *p);
}

TEST(Certificate, MissingMapLine) {
  const auto p = share(catalog::named(Name::P).graph);
  auto doc = make_certificate(identity_mapping(p), "P", "P");
  doc.map.pop_back();
  EXPECT_EQ(code_of([&] { read_certificate(write_certificate(doc)); }), Errc::MappingNotTotal);
  doc = make_certificate(identity_mapping(p), "P", "P");
  doc.map.push_back(doc.map.front());
  EXPECT_EQ(code_of([&] { read_certificate(write_certificate(doc)); }), Errc::MappingNotTotal);
}

TEST(Certificate, CorruptedMapLineFailsVerification) {
  const auto p = share(catalog::named(Name::P).graph);
  auto doc = make_certificate(identity_mapping(p), "P", "P", false);
  doc.map[0].second = doc.map[1].second;
  EXPECT_EQ(code_of([&] { read_certificate(write_certificate(doc)); }), Errc::NotACertificate);
}

TEST(Certificate, PrismIntoS10SurvivesRoundTripInline) {
  // A non-catalog edge order forces an inline sparse6 designator and relabelled map lines.
  auto prism = catalog::named(Name::PRISM).graph;
  auto pairs = prism.edge_pairs();
  std::reverse(pairs.begin(), pairs.end());
  const auto g = share(MultiGraph::build(prism.vertex_count(), pairs));
  const auto outcome = solve(g, share(catalog::named(Name::S10).graph));
  ASSERT_EQ(outcome.status, SolveStatus::Colorable);
  const auto doc = make_certificate(*outcome.certificate, std::nullopt, "S10");
  EXPECT_EQ(doc.graph.front(), ':');
  const auto back = read_certificate(write_certificate(doc));
  EXPECT_TRUE(verify(back).ok());
  EXPECT_EQ(*back.source, canonical(*g));
  const auto new_id = canonical_edge_order(*g).second;
  for (EdgeId e = 0; e < g->edge_count(); ++e) EXPECT_EQ(back.image[new_id[e]], outcome.certificate->image[e]);
}

TEST(Certificate, UnknownDesignator) {
  EXPECT_EQ(code_of([] { resolve_designator("@NOPE"); }), Errc::UnknownGraphDesignator);
  EXPECT_EQ(code_of([] { read_certificate("graph @P\nmap 0 0\n"); }), Errc::UnknownGraphDesignator);
  EXPECT_EQ(code_of([] { read_certificate("graph @P\npattern :!!\n"); }), Errc::UnknownGraphDesignator);
}

}  // namespace
