#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hcolor/multigraph.hpp"

namespace hcolor::catalog {

enum class Name { P, S4, S10, S12, GSTAR, P_MINUS_V, K4, K33, PRISM };

/// A catalog graph plus the vertex labels used to talk about it
/// (for S10: "w", "z1", "x1", "y1", ...; for G*: "u", "s1", "s2", "t1", "t2", "t3", ...).
struct NamedGraph {
  Name name;
  MultiGraph graph;
  std::map<std::string, VertexId, std::less<>> labels;

  VertexId vertex(std::string_view label) const;
  /// The unique edge joining two labelled vertices; throws if there is none or several.
  EdgeId edge(std::string_view a, std::string_view b) const;
};

std::string_view to_string(Name name) noexcept;
/// Accepts "S10" or "@S10"; throws Error(UnknownName).
Name parse_name(std::string_view text);
const std::vector<Name>& all_names();

NamedGraph named(Name name);
NamedGraph named(std::string_view text);

// Construction operators.

/// Edge e=(a,b) becomes (a,new) keeping id e, plus a new edge (new,b) with the next free id.
MultiGraph subdivide(const MultiGraph& g, EdgeId e);

/// v becomes the first triangle vertex and two new vertices are appended. Former
/// edges of v go to distinct triangle vertices in incidence order; the three
/// triangle edges (v,n1), (n1,n2), (v,n2) are appended. Throws Error(DegreeTooHigh).
MultiGraph expand_to_triangle(const MultiGraph& g, VertexId v);

struct Attachment {
  MultiGraph graph;
  std::vector<VertexId> copy_vertex;  // pattern vertex -> vertex in result
  std::vector<EdgeId> copy_edge;      // pattern edge -> edge in result
};

/// Adds a copy of `pattern` and identifies its pendant vertex labelled `pendant` with v.
/// Throws Error(DegreeMismatch) if deg(v) != 2, Error(LabelNotPendant) if the label is not degree 1.
Attachment attach_pendant_copy(const MultiGraph& g, VertexId v, const NamedGraph& pattern,
                               std::string_view pendant);

/// Intermediate stages of the G* construction, exposed for tests and tooling.
struct GStarStages {
  MultiGraph subdivided;  // Petersen with the three edges at vertex 0 subdivided
  MultiGraph expanded;    // ... and the first subdivision vertex expanded to a triangle
  NamedGraph result;
};
GStarStages g_star_stages();
NamedGraph build_g_star();

/// Edges of the Petersen-minus-a-vertex part of G* (Petersen vertices other than u).
EdgeIdSet g_star_petersen_part(const NamedGraph& g_star);

}  // namespace hcolor::catalog
