#include "hcolor/catalog.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace hcolor::catalog {
namespace {

using Pairs = std::vector<std::pair<VertexId, VertexId>>;

NamedGraph make(Name name, std::size_t n, const Pairs& pairs,
                std::map<std::string, VertexId, std::less<>> labels = {}) {
  return {name, MultiGraph::build(n, pairs), std::move(labels)};
}

std::map<std::string, VertexId, std::less<>> numeric_labels(std::size_t n) {
  std::map<std::string, VertexId, std::less<>> labels;
  for (VertexId v = 0; v < n; ++v) labels.emplace("v" + std::to_string(v), v);
  return labels;
}

// Outer 5-cycle 0..4, spokes i--i+5, inner pentagram on 5..9.
Pairs petersen_pairs() {
  Pairs p;
  for (VertexId i = 0; i < 5; ++i) p.emplace_back(i, (i + 1) % 5);
  for (VertexId i = 0; i < 5; ++i) p.emplace_back(i, i + 5);
  for (VertexId i = 0; i < 5; ++i) p.emplace_back(i + 5, (i + 2) % 5 + 5);
  return p;
}

NamedGraph petersen() { return make(Name::P, 10, petersen_pairs(), numeric_labels(10)); }

NamedGraph petersen_minus_vertex() {
  // Delete vertex 0 and shift the remaining labels down by one.
  Pairs p;
  for (auto [a, b] : petersen_pairs()) {
    if (a != 0 && b != 0) p.emplace_back(a - 1, b - 1);
  }
  return make(Name::P_MINUS_V, 9, p, numeric_labels(9));
}

// w=0, z_i=i, x_i=2i+2, y_i=2i+3 for i=1..3.
NamedGraph s10() {
  Pairs p;
  std::map<std::string, VertexId, std::less<>> labels{{"w", 0}};
  for (VertexId i = 1; i <= 3; ++i) p.emplace_back(0, i);
  for (VertexId i = 1; i <= 3; ++i) {
    VertexId z = i, x = 2 * i + 2, y = 2 * i + 3;
    p.insert(p.end(), {{z, x}, {z, y}, {x, y}, {x, y}});
    auto k = std::to_string(i);
    labels.emplace("z" + k, z);
    labels.emplace("x" + k, x);
    labels.emplace("y" + k, y);
  }
  return make(Name::S10, 10, p, std::move(labels));
}

// w_i=i-1, z_i=i+2, x_i=2i+4, y_i=2i+5 for i=1..3.
NamedGraph s12() {
  Pairs p{{0, 1}, {1, 2}, {0, 2}};
  std::map<std::string, VertexId, std::less<>> labels;
  for (VertexId i = 1; i <= 3; ++i) p.emplace_back(i - 1, i + 2);
  for (VertexId i = 1; i <= 3; ++i) {
    VertexId z = i + 2, x = 2 * i + 4, y = 2 * i + 5;
    p.insert(p.end(), {{z, x}, {z, y}, {x, y}, {x, y}});
    auto k = std::to_string(i);
    labels.emplace("w" + k, i - 1);
    labels.emplace("z" + k, z);
    labels.emplace("x" + k, x);
    labels.emplace("y" + k, y);
  }
  return make(Name::S12, 12, p, std::move(labels));
}

NamedGraph s4() {
  return make(Name::S4, 4, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {2, 3}}, {{"x", 0}, {"y", 1}, {"z", 2}, {"t", 3}});
}

NamedGraph k4() { return make(Name::K4, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, numeric_labels(4)); }

NamedGraph k33() {
  Pairs p;
  for (VertexId a = 0; a < 3; ++a) {
    for (VertexId b = 3; b < 6; ++b) p.emplace_back(a, b);
  }
  return make(Name::K33, 6, p, numeric_labels(6));
}

NamedGraph prism() {
  return make(Name::PRISM, 6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}},
              numeric_labels(6));
}

constexpr std::array<std::pair<Name, std::string_view>, 9> kNames{{
    {Name::P, "P"},
    {Name::S4, "S4"},
    {Name::S10, "S10"},
    {Name::S12, "S12"},
    {Name::GSTAR, "GSTAR"},
    {Name::P_MINUS_V, "P_MINUS_V"},
    {Name::K4, "K4"},
    {Name::K33, "K33"},
    {Name::PRISM, "PRISM"},
}};

}  // namespace

VertexId NamedGraph::vertex(std::string_view label) const {
  auto it = labels.find(label);
  if (it == labels.end()) {
    throw Error(Errc::UnknownName, "no vertex labelled '" + std::string(label) + "' in " +
                                       std::string(to_string(name)));
  }
  return it->second;
}

EdgeId NamedGraph::edge(std::string_view a, std::string_view b) const {
  VertexId va = vertex(a), vb = vertex(b);
  std::optional<EdgeId> found;
  for (EdgeId e : graph.incident(va)) {
    if (graph.endpoints(e).other(va) == vb) {
      if (found) {
        throw Error(Errc::UnknownName, "edge " + std::string(a) + std::string(b) + " is not unique");
      }
      found = e;
    }
  }
  if (!found) throw Error(Errc::UnknownName, "no edge " + std::string(a) + std::string(b));
  return *found;
}

std::string_view to_string(Name name) noexcept {
  for (const auto& [n, text] : kNames) {
    if (n == name) return text;
  }
  return "?";
}

Name parse_name(std::string_view text) {
  if (!text.empty() && text.front() == '@') text.remove_prefix(1);
  for (const auto& [n, s] : kNames) {
    if (s == text) return n;
  }
  throw Error(Errc::UnknownName, "unknown catalog graph '" + std::string(text) + "'");
}

const std::vector<Name>& all_names() {
  static const std::vector<Name> names = [] {
    std::vector<Name> out;
    for (const auto& [n, s] : kNames) out.push_back(n);
    return out;
  }();
  return names;
}

NamedGraph named(Name name) {
  switch (name) {
    case Name::P: return petersen();
    case Name::S4: return s4();
    case Name::S10: return s10();
    case Name::S12: return s12();
    case Name::GSTAR: return build_g_star();
    case Name::P_MINUS_V: return petersen_minus_vertex();
    case Name::K4: return k4();
    case Name::K33: return k33();
    case Name::PRISM: return prism();
  }
  throw Error(Errc::UnknownName, "unhandled catalog name");
}

NamedGraph named(std::string_view text) { return named(parse_name(text)); }

MultiGraph subdivide(const MultiGraph& g, EdgeId e) {
  const Endpoints ep = g.endpoints(e);
  auto pairs = g.edge_pairs();
  const auto fresh = static_cast<VertexId>(g.vertex_count());
  pairs[e] = {ep.a, fresh};
  pairs.emplace_back(fresh, ep.b);
  return MultiGraph::build(g.vertex_count() + 1, pairs);
}

MultiGraph expand_to_triangle(const MultiGraph& g, VertexId v) {
  auto inc = g.incident(v);
  if (inc.size() > 3) {
    throw Error(Errc::DegreeTooHigh, "vertex " + std::to_string(v) + " has degree " + std::to_string(inc.size()));
  }
  const auto n = static_cast<VertexId>(g.vertex_count());
  const std::array<VertexId, 3> corner{v, n, n + 1};
  auto pairs = g.edge_pairs();
  for (std::size_t i = 0; i < inc.size(); ++i) {
    auto& [a, b] = pairs[inc[i]];
    if (a == v) a = corner[i];
    else b = corner[i];
  }
  pairs.insert(pairs.end(), {{corner[0], corner[1]}, {corner[1], corner[2]}, {corner[0], corner[2]}});
  return MultiGraph::build(g.vertex_count() + 2, pairs);
}

Attachment attach_pendant_copy(const MultiGraph& g, VertexId v, const NamedGraph& pattern,
                               std::string_view pendant) {
  if (g.degree(v) != 2) {
    throw Error(Errc::DegreeMismatch, "attachment vertex " + std::to_string(v) + " has degree " +
                                          std::to_string(g.degree(v)) + ", expected 2");
  }
  const VertexId t = pattern.vertex(pendant);
  if (pattern.graph.degree(t) != 1) {
    throw Error(Errc::LabelNotPendant, "label '" + std::string(pendant) + "' is not a degree-1 vertex");
  }
  Attachment out;
  auto pairs = g.edge_pairs();
  auto next = static_cast<VertexId>(g.vertex_count());
  out.copy_vertex.resize(pattern.graph.vertex_count());
  for (VertexId p = 0; p < pattern.graph.vertex_count(); ++p) {
    out.copy_vertex[p] = p == t ? v : next++;
  }
  for (const auto& ep : pattern.graph.edges()) {
    out.copy_edge.push_back(static_cast<EdgeId>(pairs.size()));
    pairs.emplace_back(out.copy_vertex[ep.a], out.copy_vertex[ep.b]);
  }
  out.graph = MultiGraph::build(next, pairs);
  return out;
}

GStarStages g_star_stages() {
  const NamedGraph p = petersen();
  constexpr VertexId u = 0;

  // Subdivide the three edges at u, in u's incidence order.
  MultiGraph g = p.graph;
  std::vector<VertexId> subdivision;
  for (EdgeId e : p.graph.incident(u)) {
    subdivision.push_back(static_cast<VertexId>(g.vertex_count()));
    g = subdivide(g, e);
  }
  GStarStages stages;
  stages.subdivided = g;

  const EdgeId u_to_first = p.graph.incident(u)[0];
  const VertexId t1 = subdivision[0];
  const auto t2 = static_cast<VertexId>(g.vertex_count());
  const auto t3 = t2 + 1;
  g = expand_to_triangle(g, t1);
  stages.expanded = g;

  std::map<std::string, VertexId, std::less<>> labels{
      {"u", u}, {"s1", subdivision[1]}, {"s2", subdivision[2]}, {"t1", t1}, {"t2", t2}, {"t3", t3}};
  for (VertexId i = 1; i < 10; ++i) labels.emplace("p" + std::to_string(i), i);

  const NamedGraph arm = s4();
  for (std::string_view host : {"s1", "s2", "t3"}) {
    Attachment att = attach_pendant_copy(g, labels.find(host)->second, arm, "t");
    for (std::string_view part : {"x", "y", "z"}) {
      labels.emplace(std::string(host) + "." + std::string(part), att.copy_vertex[arm.vertex(part)]);
    }
    g = std::move(att.graph);
  }

  if (g.vertex_count() != 24 || g.edge_count() != 36 || !is_k_regular(g, 3) || !is_connected(g) ||
      bridges(g).size() != 3 || g.endpoints(u_to_first).other(u) != t1) {
    throw std::logic_error("G* construction broke its structural invariants");
  }
  stages.result = NamedGraph{Name::GSTAR, std::move(g), std::move(labels)};
  return stages;
}

NamedGraph build_g_star() { return g_star_stages().result; }

EdgeIdSet g_star_petersen_part(const NamedGraph& g_star) {
  EdgeIdSet out;
  for (EdgeId e = 0; e < g_star.graph.edge_count(); ++e) {
    const auto& ep = g_star.graph.endpoints(e);
    if (ep.a >= 1 && ep.a < 10 && ep.b >= 1 && ep.b < 10) out.push_back(e);
  }
  return out;
}

}  // namespace hcolor::catalog
