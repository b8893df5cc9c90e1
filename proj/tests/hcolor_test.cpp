#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "hcolor/catalog.hpp"
#include "hcolor/observation.hpp"
#include "hcolor/solver.hpp"
#include "oracles.hpp"

using namespace hcolor;
using catalog::Name;
using fixtures::cat;

namespace {

void expect_sound(const EdgeMapping& f) {
  ASSERT_TRUE(verify(f).ok()) << verify(f).detail;
  const auto fv = induced_vertex_map(f);
  for (VertexId v = 0; v < f.source->vertex_count(); ++v) {
    EXPECT_EQ(f.target->degree(fv.image[v]), f.source->degree(v));
  }
  const auto report = check_observation1(f);
  EXPECT_TRUE(report.passed()) << (report.witnesses.empty() ? "" : report.witnesses.front());
}

TEST(Verify, IdentityPasses) {
  const auto p = cat(Name::P);
  EXPECT_TRUE(verify(identity_mapping(p)).ok());
}

TEST(Verify, ConstantMapFailsProperness) {
  const auto k4 = cat(Name::K4);
  const auto p = cat(Name::P);
  const EdgeMapping f{k4, p, std::vector<EdgeId>(6, 0)};
  const auto r = verify(f);
  EXPECT_EQ(r.violation, Violation::AdjacentSameImage);
  EXPECT_FALSE(r.detail.empty());
}

TEST(Verify, ParallelPairMustDiffer) {
  const auto two = fixtures::two_circuit();
  EXPECT_EQ(verify(EdgeMapping{two, two, {0, 0}}).violation, Violation::AdjacentSameImage);
  EXPECT_TRUE(verify(EdgeMapping{two, two, {1, 0}}).ok());
}

TEST(Verify, StarMismatch) {
  // C4 onto C4 with images 0,1,0,1: proper, but {0,1} is a star of C4 only at vertex 1.
  const auto c4 = fixtures::cycle(4);
  const auto r = verify(EdgeMapping{c4, c4, {0, 1, 0, 1}});
  EXPECT_TRUE(r.ok());
  const auto bad = verify(EdgeMapping{c4, c4, {0, 2, 0, 2}});
  EXPECT_EQ(bad.violation, Violation::StarMismatch);
}

TEST(Verify, NotTotal) {
  const auto p = cat(Name::P);
  try {
    verify(EdgeMapping{p, p, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MappingNotTotal);
  }
  std::vector<EdgeId> out_of_range(15, 0);
  out_of_range[3] = 99;
  EXPECT_THROW(verify(EdgeMapping{p, p, out_of_range}), Error);
}

TEST(InducedVertexMap, IdentityAndErrors) {
  const auto p = cat(Name::P);
  const auto fv = induced_vertex_map(identity_mapping(p));
  for (VertexId v = 0; v < 10; ++v) EXPECT_EQ(fv.image[v], v);
  EXPECT_TRUE(fv.ambiguous.empty());
  try {
    induced_vertex_map(EdgeMapping{p, p, std::vector<EdgeId>(15, 0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotACertificate);
  }
}

TEST(InducedVertexMap, AmbiguousStarsTakeLowestId) {
  // Both ends of an isolated edge have the same star.
  const auto k2 = share(MultiGraph::build(2, {{0, 1}}));
  const auto fv = induced_vertex_map(identity_mapping(k2));
  EXPECT_EQ(fv.image, (std::vector<VertexId>{0, 0}));
  EXPECT_EQ(fv.ambiguous, (std::vector<VertexId>{0, 1}));
}

TEST(InducedVertexMap, PrismIntoS10LandsOnCubicVertices) {
  const auto s10 = cat(Name::S10);
  const auto outcome = solve(cat(Name::PRISM), s10);
  ASSERT_EQ(outcome.status, SolveStatus::Colorable);
  const auto fv = induced_vertex_map(*outcome.certificate);
  for (auto u : fv.image) EXPECT_EQ(s10->degree(u), 3u);
  expect_sound(*outcome.certificate);
}

TEST(Solve, GStarNotS10Colorable) {
  const auto outcome = solve(cat(Name::GSTAR), cat(Name::S10));
  EXPECT_EQ(outcome.status, SolveStatus::NotColorable);
  EXPECT_FALSE(outcome.certificate);
  EXPECT_GT(outcome.stats.nodes, 0u);
}

TEST(Solve, GStarNotS12Colorable) {
  EXPECT_EQ(solve(cat(Name::GSTAR), cat(Name::S12)).status, SolveStatus::NotColorable);
}

TEST(Solve, GStarVerdictIndependentOfOrderAndSymmetry) {
  SolveOptions opts;
  opts.break_parallel_symmetry = true;
  EXPECT_EQ(solve(cat(Name::GSTAR), cat(Name::S10), opts).status, SolveStatus::NotColorable);
  opts.order = OrderHeuristic::Bfs;
  opts.break_parallel_symmetry = true;
  opts.bridge_rule = true;
  EXPECT_EQ(solve(cat(Name::S12), cat(Name::S10), opts).status, SolveStatus::Colorable);
}

TEST(Solve, S12IsS10Colorable) {
  const auto outcome = solve(cat(Name::S12), cat(Name::S10));
  ASSERT_EQ(outcome.status, SolveStatus::Colorable);
  expect_sound(*outcome.certificate);
}

TEST(Solve, PetersenColorsItself) {
  const auto outcome = solve(cat(Name::P), cat(Name::P));
  ASSERT_EQ(outcome.status, SolveStatus::Colorable);
  expect_sound(*outcome.certificate);
}

TEST(Solve, NodeLimitGivesResourceLimitNeverAVerdict) {
  SolveOptions opts;
  opts.node_limit = 10;
  const auto outcome = solve(cat(Name::GSTAR), cat(Name::S10), opts);
  EXPECT_EQ(outcome.status, SolveStatus::ResourceLimit);
  EXPECT_LE(outcome.stats.nodes, 10u);
}

TEST(Solve, TimeLimitGivesResourceLimit) {
  SolveOptions opts;
  opts.order = OrderHeuristic::Bfs;
  opts.time_limit = std::chrono::milliseconds(0);
  EXPECT_EQ(solve(cat(Name::GSTAR), cat(Name::S10), opts).status, SolveStatus::ResourceLimit);
}

TEST(Solve, DeterministicOutcomesAndNodeCounts) {
  const auto a = solve(cat(Name::GSTAR), cat(Name::S12));
  const auto b = solve(cat(Name::GSTAR), cat(Name::S12));
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.stats.nodes, b.stats.nodes);
  EXPECT_EQ(a.stats.max_depth, b.stats.max_depth);
  const auto c = solve(cat(Name::PRISM), cat(Name::S12));
  const auto d = solve(cat(Name::PRISM), cat(Name::S12));
  EXPECT_EQ(c.certificate->image, d.certificate->image);
}

TEST(Solve, DegreeZeroVertices) {
  const auto isolated = share(MultiGraph::build(1, {}));
  EXPECT_EQ(solve(isolated, cat(Name::P)).status, SolveStatus::NotColorable);
  EXPECT_EQ(solve(isolated, share(MultiGraph::build(2, {}))).status, SolveStatus::Colorable);
  EXPECT_EQ(solve(share(MultiGraph{}), cat(Name::P)).status, SolveStatus::Colorable);
}

TEST(Enumerate, Examples) {
  EXPECT_TRUE(enumerate(cat(Name::GSTAR), cat(Name::S10), {}, 1).certificates.empty());
  EXPECT_EQ(enumerate(cat(Name::P), cat(Name::P), {}, 1).certificates.size(), 1u);
  const auto k4 = enumerate(cat(Name::K4), cat(Name::S10), {}, 5);
  EXPECT_EQ(k4.certificates.size(), 5u);
  for (const auto& f : k4.certificates) expect_sound(f);
  for (std::size_t i = 0; i < k4.certificates.size(); ++i) {
    for (std::size_t j = i + 1; j < k4.certificates.size(); ++j) {
      EXPECT_NE(k4.certificates[i].image, k4.certificates[j].image);
    }
  }
}

TEST(Enumerate, ExhaustiveCountMatchesBruteForce) {
  // Every colouring found, with nothing left out and nothing duplicated.
  for (auto [g, h] : {std::pair{fixtures::cycle(4), fixtures::two_circuit()},
                      std::pair{cat(Name::K4), fixtures::theta()},
                      std::pair{fixtures::dumbbell(), cat(Name::S4)}}) {
    const auto run = enumerate(g, h, {}, 1'000'000);
    ASSERT_TRUE(run.exhaustive);
    const auto brute = oracle::brute_force_colorings(*g, *h, 1'000'000);
    EXPECT_EQ(run.certificates.size(), brute.size());
  }
}

TEST(Enumerate, ParallelSymmetryKeepsVerdictAndShrinksCount) {
  SolveOptions sym;
  sym.break_parallel_symmetry = true;
  const auto plain = enumerate(fixtures::cycle(4), fixtures::two_circuit(), {}, 1000);
  const auto reduced = enumerate(fixtures::cycle(4), fixtures::two_circuit(), sym, 1000);
  EXPECT_EQ(plain.certificates.size(), 2u);
  EXPECT_EQ(reduced.certificates.size(), 1u);
}

TEST(ClassOneLift, ValidColorings) {
  for (auto gname : {Name::K4, Name::K33, Name::PRISM}) {
    const auto g = cat(gname);
    const auto colouring = edge_coloring_with(*g, 3);
    ASSERT_TRUE(colouring);
    for (auto [hname, label] : {std::pair{Name::S10, "z1"}, {Name::S12, "w1"}, {Name::P, "v0"}}) {
      const auto h = catalog::named(hname);
      const auto u = h.vertex(label);
      const auto f = class1_lift(g, colouring->color, share(h.graph), u);
      expect_sound(f);
      for (auto image : induced_vertex_map(f).image) EXPECT_EQ(image, u);
    }
  }
}

TEST(ClassOneLift, Errors) {
  const auto p = cat(Name::P);
  // Any claimed 3-colouring of P is improper, since chi'(P) = 4.
  std::vector<std::uint32_t> claim(15);
  for (EdgeId e = 0; e < 15; ++e) claim[e] = e % 3;
  try {
    class1_lift(p, claim, cat(Name::S10), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotProper);
  }
  try {
    class1_lift(cat(Name::S4), std::vector<std::uint32_t>(5, 0), cat(Name::S10), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotCubic);
  }
  const auto k4 = cat(Name::K4);
  const auto colouring = edge_coloring_with(*k4, 3);
  try {
    class1_lift(k4, colouring->color, cat(Name::S4), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegreeMismatch);
  }
}

TEST(Compose, IdentityIsNeutral) {
  const auto outcome = solve(cat(Name::K33), cat(Name::S10));
  const auto& f = *outcome.certificate;
  EXPECT_EQ(compose(f, identity_mapping(f.target)).image, f.image);
}

TEST(Compose, PrismThroughS12) {
  const auto s12 = cat(Name::S12);
  const auto first = solve(cat(Name::PRISM), s12);
  const auto second = solve(s12, cat(Name::S10));
  ASSERT_EQ(first.status, SolveStatus::Colorable);
  ASSERT_EQ(second.status, SolveStatus::Colorable);
  const auto f = compose(*first.certificate, *second.certificate);
  expect_sound(f);
}

TEST(Compose, Errors) {
  const auto f = *solve(cat(Name::PRISM), cat(Name::S12)).certificate;
  const auto g = *solve(cat(Name::S10), cat(Name::S10)).certificate;
  try {
    compose(f, g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TargetMismatch);
  }
  EdgeMapping broken = f;
  broken.image.assign(broken.image.size(), 0);
  try {
    compose(broken, *solve(cat(Name::S12), cat(Name::S10)).certificate);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotACertificate);
  }
}

TEST(Observation, PrismIntoS10EvenPreimages) {
  const auto run = enumerate(cat(Name::PRISM), cat(Name::S10), {}, 50);
  ASSERT_FALSE(run.certificates.empty());
  for (const auto& f : run.certificates) {
    EXPECT_TRUE(two_circuit_preimages_even(f));
    EXPECT_TRUE(check_observation1(f).passed());
  }
}

TEST(Observation, IdentityAndVacuousBridgeCheck) {
  EXPECT_TRUE(check_observation1(identity_mapping(cat(Name::P))).passed());
  const auto f = *solve(cat(Name::K33), cat(Name::S10)).certificate;
  const auto report = check_observation1(f);
  EXPECT_TRUE(report.bridges_to_bridges);
  EXPECT_TRUE(report.passed());
  EXPECT_GT(report.subgraphs_tested, 0u);
}

TEST(Observation, RejectsNonCertificate) {
  const auto p = cat(Name::P);
  try {
    check_observation1(EdgeMapping{p, p, std::vector<EdgeId>(15, 0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotACertificate);
  }
}

TEST(Observation, BridgeRuleHoldsWithoutPruning) {
  // With the bridge filter switched off the solver can only find colourings the
  // rule allows anyway.
  SolveOptions opts;
  opts.bridge_rule = false;
  const auto run = enumerate(fixtures::dumbbell(), cat(Name::S10), opts, 200);
  ASSERT_FALSE(run.certificates.empty());
  for (const auto& f : run.certificates) EXPECT_TRUE(check_observation1(f).bridges_to_bridges);
  EXPECT_EQ(solve(cat(Name::GSTAR), cat(Name::S12), opts).status, SolveStatus::NotColorable);
}

TEST(OracleEquivalence, FixturePairs) {
  for (const auto& [g, h] : fixtures::oracle_pairs()) {
    ASSERT_LE(g.graph->edge_count(), 12u);
    const auto outcome = solve(g.graph, h.graph);
    const auto brute = oracle::brute_force_colorings(*g.graph, *h.graph, 1);
    EXPECT_EQ(outcome.status == SolveStatus::Colorable, !brute.empty()) << g.name << " / " << h.name;
    EXPECT_NE(outcome.status, SolveStatus::ResourceLimit);
    if (outcome.certificate) expect_sound(*outcome.certificate);
  }
}

TEST(OracleEquivalence, RandomSmallPairs) {
  std::mt19937 rng(23);
  int colourable = 0, total = 0;
  for (int round = 0; round < 300; ++round) {
    const auto g = share(oracle::random_multigraph(rng, 5, 6));
    const auto h = share(oracle::random_multigraph(rng, 5, 7));
    const auto outcome = solve(g, h);
    const auto brute = oracle::brute_force_colorings(*g, *h, 1);
    ASSERT_EQ(outcome.status == SolveStatus::Colorable, !brute.empty()) << round;
    if (outcome.certificate) {
      ++colourable;
      expect_sound(*outcome.certificate);
    }
    ++total;
  }
  EXPECT_GT(colourable, 0);
  EXPECT_LT(colourable, total);
}

}  // namespace
