#include "hcolor/multigraph.hpp"

#include <algorithm>
#include <string>

namespace hcolor {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::LoopRejected: return "LoopRejected";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::EdgeOutOfRange: return "EdgeOutOfRange";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::UnknownName: return "UnknownName";
    case Errc::DegreeTooHigh: return "DegreeTooHigh";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::LabelNotPendant: return "LabelNotPendant";
    case Errc::MappingNotTotal: return "MappingNotTotal";
    case Errc::NotACertificate: return "NotACertificate";
    case Errc::TargetMismatch: return "TargetMismatch";
    case Errc::NotCubic: return "NotCubic";
    case Errc::NotProper: return "NotProper";
    case Errc::MalformedEncoding: return "MalformedEncoding";
    case Errc::UnknownGraphDesignator: return "UnknownGraphDesignator";
  }
  return "Unknown";
}

MultiGraph MultiGraph::build(std::size_t vertex_count, std::span<const std::pair<VertexId, VertexId>> pairs) {
  MultiGraph g;
  g.incidence_.resize(vertex_count);
  g.edges_.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a >= vertex_count || b >= vertex_count) {
      throw Error(Errc::VertexOutOfRange, "edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                              ") with only " + std::to_string(vertex_count) + " vertices");
    }
    if (a == b) {
      throw Error(Errc::LoopRejected, "loop at vertex " + std::to_string(a));
    }
    const auto id = static_cast<EdgeId>(g.edges_.size());
    g.edges_.push_back({a, b});
    g.incidence_[a].push_back(id);
    g.incidence_[b].push_back(id);
  }
  return g;
}

const Endpoints& MultiGraph::endpoints(EdgeId e) const {
  if (e >= edges_.size()) {
    throw Error(Errc::EdgeOutOfRange, "edge " + std::to_string(e));
  }
  return edges_[e];
}

std::span<const EdgeId> MultiGraph::incident(VertexId v) const {
  if (v >= incidence_.size()) {
    throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
  }
  return incidence_[v];
}

std::size_t MultiGraph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& inc : incidence_) best = std::max(best, inc.size());
  return best;
}

bool MultiGraph::adjacent_edges(EdgeId e, EdgeId f) const {
  if (e == f) return false;
  const auto& x = endpoints(e);
  const auto& y = endpoints(f);
  return x.touches(y.a) || x.touches(y.b);
}

std::vector<std::pair<VertexId, VertexId>> MultiGraph::edge_pairs() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(e.a, e.b);
  return out;
}

std::pair<MultiGraph, std::vector<EdgeId>> canonical_edge_order(const MultiGraph& g) {
  std::vector<EdgeId> order(g.edge_count());
  for (EdgeId e = 0; e < order.size(); ++e) order[e] = e;
  auto key = [&](EdgeId e) {
    const auto& ep = g.endpoints(e);
    return std::pair{std::max(ep.a, ep.b), std::min(ep.a, ep.b)};
  };
  std::stable_sort(order.begin(), order.end(), [&](EdgeId x, EdgeId y) { return key(x) < key(y); });

  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::vector<EdgeId> new_id(g.edge_count());
  pairs.reserve(order.size());
  for (EdgeId pos = 0; pos < order.size(); ++pos) {
    auto [hi, lo] = key(order[pos]);
    pairs.emplace_back(lo, hi);
    new_id[order[pos]] = pos;
  }
  return {MultiGraph::build(g.vertex_count(), pairs), std::move(new_id)};
}

}  // namespace hcolor
