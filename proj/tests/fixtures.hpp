#pragma once

#include <string>
#include <vector>

#include "hcolor/catalog.hpp"

namespace hcolor::fixtures {

struct Named {
  std::string name;
  GraphRef graph;
};

inline GraphRef cycle(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> p;
  for (VertexId i = 0; i < n; ++i) p.emplace_back(i, static_cast<VertexId>((i + 1) % n));
  return share(MultiGraph::build(n, p));
}

inline GraphRef two_circuit() { return share(MultiGraph::build(2, {{0, 1}, {0, 1}})); }
inline GraphRef theta() { return share(MultiGraph::build(2, {{0, 1}, {0, 1}, {0, 1}})); }
inline GraphRef claw() { return share(MultiGraph::build(4, {{0, 1}, {0, 2}, {0, 3}})); }
inline GraphRef path3() { return share(MultiGraph::build(3, {{0, 1}, {1, 2}})); }

// Two S10 arms joined by a bridge between their z vertices: cubic, one bridge.
inline GraphRef dumbbell() {
  return share(MultiGraph::build(6, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 4}, {3, 5}, {4, 5}, {2, 5}}));
}

inline GraphRef cat(catalog::Name n) { return share(catalog::named(n).graph); }

/// (G, H) pairs with |E(G)| <= 12 and both verdicts represented.
inline std::vector<std::pair<Named, Named>> oracle_pairs() {
  using catalog::Name;
  const Named k4{"K4", cat(Name::K4)}, k33{"K33", cat(Name::K33)}, prism{"PRISM", cat(Name::PRISM)},
      s4{"S4", cat(Name::S4)}, s10{"S10", cat(Name::S10)}, s12{"S12", cat(Name::S12)}, p{"P", cat(Name::P)},
      c3{"C3", cycle(3)}, c4{"C4", cycle(4)}, c5{"C5", cycle(5)}, c6{"C6", cycle(6)}, dc{"2-circuit", two_circuit()},
      th{"theta", theta()}, db{"dumbbell", dumbbell()}, cl{"claw", claw()}, p3{"path3", path3()};
  return {
      {k4, s10},  {k4, p},    {k4, k33},   {k4, th},   {k4, c3},   {k4, s4},     {k33, s10},  {k33, k4},
      {prism, s12}, {prism, k4}, {prism, th}, {s4, s10},  {s4, s4},   {dc, s10},    {c3, dc},    {c4, dc},
      {c5, dc},   {c6, dc},   {c4, c3},    {c5, c3},   {c3, c4},   {th, s10},    {th, th},    {th, k4},
      {db, s10},  {db, s12},  {db, p},     {db, s4},   {db, k4},   {cl, s4},     {cl, cl}, {p3, c3},
      {p3, p3},   {c6, c3},   {dc, th},
  };
}

}  // namespace hcolor::fixtures
