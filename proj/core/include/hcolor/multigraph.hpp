#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hcolor/error.hpp"

namespace hcolor {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Sorted, duplicate-free list of edge ids of one graph.
using EdgeIdSet = std::vector<EdgeId>;

struct Endpoints {
  VertexId a;
  VertexId b;

  VertexId other(VertexId v) const noexcept { return v == a ? b : a; }
  bool touches(VertexId v) const noexcept { return v == a || v == b; }
  friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

/// Finite loop-free multigraph with dense vertex and edge ids.
///
/// Edge ids follow construction order and parallel edges get distinct ids.
/// Instances are immutable; every transformation returns a new graph.
class MultiGraph {
public:
  MultiGraph() = default;

  /// Throws Error(LoopRejected) or Error(VertexOutOfRange).
  static MultiGraph build(std::size_t vertex_count, std::span<const std::pair<VertexId, VertexId>> pairs);
  static MultiGraph build(std::size_t vertex_count, std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
    return build(vertex_count, std::span<const std::pair<VertexId, VertexId>>(pairs.begin(), pairs.size()));
  }

  std::size_t vertex_count() const noexcept { return incidence_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Endpoints& endpoints(EdgeId e) const;
  std::span<const Endpoints> edges() const noexcept { return edges_; }

  /// Incident edge ids of v in increasing id order; parallel edges appear once each.
  std::span<const EdgeId> incident(VertexId v) const;
  std::size_t degree(VertexId v) const { return incident(v).size(); }
  std::size_t max_degree() const noexcept;

  bool adjacent_edges(EdgeId e, EdgeId f) const;

  std::vector<std::pair<VertexId, VertexId>> edge_pairs() const;

  friend bool operator==(const MultiGraph& x, const MultiGraph& y) {
    return x.incidence_.size() == y.incidence_.size() && x.edges_ == y.edges_;
  }

private:
  std::vector<Endpoints> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

using GraphRef = std::shared_ptr<const MultiGraph>;

inline GraphRef share(MultiGraph g) { return std::make_shared<const MultiGraph>(std::move(g)); }

/// Edge-induced subgraph together with the maps back into the parent graph.
struct InducedSubgraph {
  MultiGraph graph;
  std::vector<VertexId> parent_vertex;  // local vertex -> parent vertex
  std::vector<EdgeId> parent_edge;      // local edge -> parent edge
};

// Structural queries. All are pure functions of the input graph.

/// Edges with exactly one end at v (the star of v).
EdgeIdSet star(const MultiGraph& g, VertexId v);

/// Vertices are the endpoints of `edges`, in increasing parent order; edges keep their relative id order.
InducedSubgraph edge_induced_subgraph(const MultiGraph& g, std::span<const EdgeId> edges);

/// Same vertex set, only the listed edges removed. Edge ids of the result are renumbered densely.
MultiGraph remove_edges(const MultiGraph& g, std::span<const EdgeId> edges);

std::vector<std::vector<VertexId>> connected_components(const MultiGraph& g);
bool is_connected(const MultiGraph& g);

EdgeIdSet bridges(const MultiGraph& g);

bool is_k_regular(const MultiGraph& g, std::size_t k);

/// Edges that have a parallel partner (same endpoints, different id).
EdgeIdSet two_circuit_edges(const MultiGraph& g);

inline constexpr std::size_t kDefaultCircuitCap = 1'000'000;

struct CircuitSummary {
  std::vector<std::size_t> lengths;  // sorted, distinct
  std::size_t count = 0;
};

/// Exhaustive circuit enumeration. Throws Error(ResourceLimit) past `cap` circuits.
CircuitSummary circuit_summary(const MultiGraph& g, std::size_t cap = kDefaultCircuitCap);
std::vector<std::size_t> circuit_lengths(const MultiGraph& g, std::size_t cap = kDefaultCircuitCap);

/// Calls visit(edges) for each circuit, edges in traversal order. Same cap semantics.
void for_each_circuit(const MultiGraph& g, const std::function<void(std::span<const EdgeId>)>& visit,
                      std::size_t cap = kDefaultCircuitCap);

struct EdgeColoring {
  std::size_t colors = 0;
  std::vector<std::uint32_t> color;  // per edge
};

/// Exact chromatic index with a witnessing coloring. Throws Error(EmptyGraph) when m == 0.
EdgeColoring optimal_edge_coloring(const MultiGraph& g);
std::size_t chromatic_index(const MultiGraph& g);

/// Proper edge coloring with at most k colors, if one exists.
std::optional<EdgeColoring> edge_coloring_with(const MultiGraph& g, std::size_t k);

bool is_proper_edge_coloring(const MultiGraph& g, std::span<const std::uint32_t> color);

std::optional<EdgeIdSet> find_perfect_matching(const MultiGraph& g);
bool is_perfect_matching(const MultiGraph& g, std::span<const EdgeId> matching);

/// Sorted degree list, largest first.
std::vector<std::size_t> degree_sequence(const MultiGraph& g);

/// Edges reordered by (max endpoint, min endpoint, id): the order a sparse6 round trip produces.
/// Returns the reordered graph and, for each original edge id, its new id.
std::pair<MultiGraph, std::vector<EdgeId>> canonical_edge_order(const MultiGraph& g);

}  // namespace hcolor
