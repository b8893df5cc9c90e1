#include "hcolor/coloring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace hcolor {
namespace {

void require_total(const MultiGraph& g, const MultiGraph& h, std::span<const EdgeId> image) {
  if (image.size() != g.edge_count()) {
    throw Error(Errc::MappingNotTotal, "mapping covers " + std::to_string(image.size()) + " of " +
                                           std::to_string(g.edge_count()) + " edges");
  }
  for (EdgeId e = 0; e < image.size(); ++e) {
    if (image[e] >= h.edge_count()) {
      throw Error(Errc::MappingNotTotal, "edge " + std::to_string(e) + " maps to " + std::to_string(image[e]) +
                                             ", outside the target's " + std::to_string(h.edge_count()) + " edges");
    }
  }
}

std::vector<EdgeId> image_of_star(const MultiGraph& g, VertexId v, std::span<const EdgeId> image) {
  std::vector<EdgeId> out;
  for (EdgeId e : g.incident(v)) out.push_back(image[e]);
  std::sort(out.begin(), out.end());
  return out;
}

// Sorted star -> vertices of H having exactly that star, lowest id first.
std::map<std::vector<EdgeId>, std::vector<VertexId>> star_index(const MultiGraph& h) {
  std::map<std::vector<EdgeId>, std::vector<VertexId>> index;
  for (VertexId u = 0; u < h.vertex_count(); ++u) {
    auto s = h.incident(u);
    index[std::vector<EdgeId>(s.begin(), s.end())].push_back(u);
  }
  return index;
}

bool same_graph(const GraphRef& x, const GraphRef& y) { return x == y || (x && y && *x == *y); }

}  // namespace

VerifyReport verify(const MultiGraph& g, const MultiGraph& h, std::span<const EdgeId> image) {
  require_total(g, h, image);
  VerifyReport report;

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        if (image[inc[i]] == image[inc[j]]) {
          report.violation = Violation::AdjacentSameImage;
          report.first_edge = inc[i];
          report.second_edge = inc[j];
          report.vertex = v;
          report.detail = "edges " + std::to_string(inc[i]) + " and " + std::to_string(inc[j]) +
                          " meet at vertex " + std::to_string(v) + " and both map to edge " +
                          std::to_string(image[inc[i]]);
          return report;
        }
      }
    }
  }

  const auto index = star_index(h);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!index.contains(image_of_star(g, v, image))) {
      report.violation = Violation::StarMismatch;
      report.vertex = v;
      report.detail = "image of the star of vertex " + std::to_string(v) + " is not the star of any target vertex";
      return report;
    }
  }
  return report;
}

VerifyReport verify(const EdgeMapping& f) {
  if (!f.source || !f.target) throw Error(Errc::MappingNotTotal, "mapping without source or target graph");
  return verify(*f.source, *f.target, f.image);
}

VertexMapping induced_vertex_map(const MultiGraph& g, const MultiGraph& h, std::span<const EdgeId> image) {
  if (auto report = verify(g, h, image); !report) {
    throw Error(Errc::NotACertificate, report.detail);
  }
  const auto index = star_index(h);
  VertexMapping out;
  out.image.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& candidates = index.at(image_of_star(g, v, image));
    out.image[v] = candidates.front();
    if (candidates.size() > 1) out.ambiguous.push_back(v);
  }
  return out;
}

VertexMapping induced_vertex_map(const EdgeMapping& f) {
  if (!f.source || !f.target) throw Error(Errc::NotACertificate, "mapping without source or target graph");
  return induced_vertex_map(*f.source, *f.target, f.image);
}

EdgeMapping class1_lift(GraphRef g, std::span<const std::uint32_t> coloring, GraphRef h, VertexId u) {
  if (!is_k_regular(*g, 3)) throw Error(Errc::NotCubic, "class-1 lift needs a cubic graph");
  const bool three_colours = std::all_of(coloring.begin(), coloring.end(), [](auto c) { return c < 3; });
  if (!three_colours || !is_proper_edge_coloring(*g, coloring)) {
    throw Error(Errc::NotProper, "not a proper 3-edge-colouring");
  }
  auto target_star = h->incident(u);
  if (target_star.size() != 3) {
    throw Error(Errc::DegreeMismatch, "target vertex " + std::to_string(u) + " has degree " +
                                          std::to_string(target_star.size()));
  }
  EdgeMapping f{std::move(g), std::move(h), {}};
  f.image.reserve(coloring.size());
  for (auto c : coloring) f.image.push_back(target_star[c]);
  return f;
}

EdgeMapping compose(const EdgeMapping& f, const EdgeMapping& g) {
  if (!same_graph(f.target, g.source)) {
    throw Error(Errc::TargetMismatch, "the first mapping's target is not the second mapping's source");
  }
  if (auto r = verify(f); !r) throw Error(Errc::NotACertificate, "first factor: " + r.detail);
  if (auto r = verify(g); !r) throw Error(Errc::NotACertificate, "second factor: " + r.detail);

  EdgeMapping out{f.source, g.target, {}};
  out.image.reserve(f.image.size());
  for (EdgeId e : f.image) out.image.push_back(g.image[e]);
  if (!verify(out)) throw std::logic_error("composition of two certificates failed to verify");
  return out;
}

EdgeMapping identity_mapping(GraphRef g) {
  EdgeMapping f{g, g, {}};
  f.image.resize(g->edge_count());
  for (EdgeId e = 0; e < f.image.size(); ++e) f.image[e] = e;
  return f;
}

}  // namespace hcolor
