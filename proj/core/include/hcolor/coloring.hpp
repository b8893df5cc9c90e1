#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcolor/multigraph.hpp"

namespace hcolor {

/// A total map E(G) -> E(H). Whether it is an H-coloring is decided by verify().
struct EdgeMapping {
  GraphRef source;  // G
  GraphRef target;  // H
  std::vector<EdgeId> image;
};

struct VertexMapping {
  std::vector<VertexId> image;
  // Vertices of G whose star matched more than one vertex of H; the lowest id was taken.
  std::vector<VertexId> ambiguous;
};

enum class Violation { None, AdjacentSameImage, StarMismatch };

struct VerifyReport {
  Violation violation = Violation::None;
  // AdjacentSameImage: the two edges and a shared endpoint. StarMismatch: the vertex.
  EdgeId first_edge = 0;
  EdgeId second_edge = 0;
  VertexId vertex = 0;
  std::string detail;

  bool ok() const noexcept { return violation == Violation::None; }
  explicit operator bool() const noexcept { return ok(); }
};

/// Checks both defining conditions of an H-coloring: adjacent edges (parallel
/// pairs included) get distinct images, and every star of G maps onto a star of H.
/// Throws Error(MappingNotTotal) if the image vector does not cover E(G) with valid ids of H.
VerifyReport verify(const MultiGraph& g, const MultiGraph& h, std::span<const EdgeId> image);
VerifyReport verify(const EdgeMapping& f);

VertexMapping induced_vertex_map(const MultiGraph& g, const MultiGraph& h, std::span<const EdgeId> image);
/// Throws Error(NotACertificate) if f does not verify.
VertexMapping induced_vertex_map(const EdgeMapping& f);

/// Sends colour class c of a proper 3-edge-colouring of cubic G to the c-th edge of the star of u.
/// Throws Error(NotCubic), Error(NotProper) or Error(DegreeMismatch).
EdgeMapping class1_lift(GraphRef g, std::span<const std::uint32_t> coloring, GraphRef h, VertexId u);

/// g o f. Throws Error(NotACertificate) if either factor fails to verify and
/// Error(TargetMismatch) if f's target differs from g's source.
EdgeMapping compose(const EdgeMapping& f, const EdgeMapping& g);

EdgeMapping identity_mapping(GraphRef g);

}  // namespace hcolor
