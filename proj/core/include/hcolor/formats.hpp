#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hcolor/coloring.hpp"

namespace hcolor::formats {

// graph6 / sparse6 as described in the nauty format notes. Optional
// ">>graph6<<" / ">>sparse6<<" headers and a trailing newline are accepted.
// Malformed input raises Error(MalformedEncoding) whose message carries the byte offset.

MultiGraph parse_graph6(std::string_view line);
/// Throws Error(MalformedEncoding) for graphs with parallel edges.
std::string write_graph6(const MultiGraph& g);

/// Loops raise Error(LoopRejected). Edges come out in (max endpoint, min endpoint) order.
MultiGraph parse_sparse6(std::string_view line);
std::string write_sparse6(const MultiGraph& g);

/// "n m" header line followed by m "u v" lines; `c ` lines are comments.
MultiGraph parse_edge_list(std::string_view text);
std::string write_edge_list(const MultiGraph& g);

/// One graph from text: sparse6 if it starts with ':', an edge list if the first
/// line holds two integers, graph6 otherwise.
MultiGraph parse_graph_text(std::string_view text);

/// Non-comment, non-empty lines of a multi-graph file.
std::vector<std::string> graph_lines(std::istream& in);

// Certificates.
//
//   c <free comment>
//   graph <designator>
//   pattern <designator>
//   map <g_edge> <h_edge>      one per edge of G
//   vmap <g_vertex> <h_vertex> optional
//
// A designator is a catalog name (@S10) or an inline sparse6 line. Inline graphs
// are written in sparse6 edge order, so map lines use those edge ids.

/// Resolves "@NAME" to the catalog graph, anything else as inline graph text.
/// Throws Error(UnknownGraphDesignator).
MultiGraph resolve_designator(std::string_view designator);

struct CertificateDocument {
  std::vector<std::string> comments;
  std::string graph;    // designator of G
  std::string pattern;  // designator of H
  std::vector<std::pair<EdgeId, EdgeId>> map;
  std::vector<std::pair<VertexId, VertexId>> vmap;
};

/// Builds a document for a verified mapping. Graphs equal to a catalog entry are
/// written by name when the caller supplies it, otherwise inline.
/// Throws Error(NotACertificate) if f does not verify.
CertificateDocument make_certificate(const EdgeMapping& f, std::optional<std::string> graph_name = {},
                                     std::optional<std::string> pattern_name = {}, bool with_vmap = true);

std::string write_certificate(const CertificateDocument& doc);
CertificateDocument parse_certificate(std::string_view text);

/// Parses, resolves both designators and re-verifies. Throws Error(MappingNotTotal)
/// when map lines do not cover E(G) exactly once, Error(NotACertificate) when the
/// mapping fails verification, Error(UnknownGraphDesignator) for bad designators.
EdgeMapping read_certificate(std::string_view text);

/// Like read_certificate but does not re-verify; for tools that report violations themselves.
EdgeMapping load_certificate_mapping(const CertificateDocument& doc);

}  // namespace hcolor::formats
