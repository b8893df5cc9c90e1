#include <algorithm>
#include <sstream>
#include <string>

#include "hcolor/catalog.hpp"
#include "hcolor/formats.hpp"

namespace hcolor::formats {
namespace {

std::string trimmed(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return std::string(s);
}

// Designators name graphs whose edge order is the one map lines refer to:
// catalog graphs in construction order, inline graphs in sparse6 order.
MultiGraph designated_form(const MultiGraph& g, const std::optional<std::string>& name, std::string& designator,
                           std::vector<EdgeId>& relabel) {
  relabel.resize(g.edge_count());
  if (name) {
    designator = name->starts_with("@") ? *name : "@" + *name;
    if (catalog::named(designator).graph == g) {
      for (EdgeId e = 0; e < relabel.size(); ++e) relabel[e] = e;
      return g;
    }
  }
  auto [ordered, new_id] = canonical_edge_order(g);
  designator = write_sparse6(g);
  relabel = std::move(new_id);
  return ordered;
}

std::uint64_t parse_number(std::istringstream& fields, std::size_t line_no) {
  long long value = -1;
  if (!(fields >> value) || value < 0) {
    throw Error(Errc::MalformedEncoding, "certificate line " + std::to_string(line_no) + ": expected a number");
  }
  return static_cast<std::uint64_t>(value);
}

}  // namespace

MultiGraph resolve_designator(std::string_view designator) {
  if (designator.starts_with("@")) {
    try {
      return catalog::named(designator).graph;
    } catch (const Error& e) {
      throw Error(Errc::UnknownGraphDesignator, e.what());
    }
  }
  try {
    return parse_graph_text(designator);
  } catch (const Error& e) {
    throw Error(Errc::UnknownGraphDesignator, "'" + std::string(designator) + "': " + e.what());
  }
}

CertificateDocument make_certificate(const EdgeMapping& f, std::optional<std::string> graph_name,
                                     std::optional<std::string> pattern_name, bool with_vmap) {
  if (auto r = verify(f); !r) throw Error(Errc::NotACertificate, r.detail);
  CertificateDocument doc;
  doc.comments.push_back("H-coloring certificate: pattern colors graph");
  std::vector<EdgeId> g_relabel, h_relabel;
  designated_form(*f.source, graph_name, doc.graph, g_relabel);
  designated_form(*f.target, pattern_name, doc.pattern, h_relabel);

  doc.map.resize(f.image.size());
  for (EdgeId e = 0; e < f.image.size(); ++e) doc.map[g_relabel[e]] = {g_relabel[e], h_relabel[f.image[e]]};
  if (with_vmap) {
    const auto fv = induced_vertex_map(f);
    for (VertexId v = 0; v < fv.image.size(); ++v) doc.vmap.emplace_back(v, fv.image[v]);
  }
  return doc;
}

std::string write_certificate(const CertificateDocument& doc) {
  std::ostringstream out;
  for (const auto& c : doc.comments) out << "c " << c << '\n';
  out << "graph " << doc.graph << '\n';
  out << "pattern " << doc.pattern << '\n';
  for (const auto& [e, x] : doc.map) out << "map " << e << ' ' << x << '\n';
  for (const auto& [v, u] : doc.vmap) out << "vmap " << v << ' ' << u << '\n';
  return out.str();
}

CertificateDocument parse_certificate(std::string_view text) {
  CertificateDocument doc;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool have_graph = false, have_pattern = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trimmed(raw);
    if (line.empty()) continue;
    if (line == "c" || line.starts_with("c ")) {
      doc.comments.push_back(line.size() > 2 ? line.substr(2) : "");
      continue;
    }
    std::istringstream fields(line);
    std::string keyword;
    fields >> keyword;
    if (keyword == "graph" || keyword == "pattern") {
      std::string designator;
      fields >> designator;
      if (designator.empty()) {
        throw Error(Errc::MalformedEncoding, "certificate line " + std::to_string(line_no) + ": missing designator");
      }
      (keyword == "graph" ? doc.graph : doc.pattern) = designator;
      (keyword == "graph" ? have_graph : have_pattern) = true;
    } else if (keyword == "map") {
      auto e = parse_number(fields, line_no);
      auto x = parse_number(fields, line_no);
      doc.map.emplace_back(static_cast<EdgeId>(e), static_cast<EdgeId>(x));
    } else if (keyword == "vmap") {
      auto v = parse_number(fields, line_no);
      auto u = parse_number(fields, line_no);
      doc.vmap.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(u));
    } else {
      throw Error(Errc::MalformedEncoding, "certificate line " + std::to_string(line_no) + ": unknown keyword '" +
                                               keyword + "'");
    }
  }
  if (!have_graph || !have_pattern) {
    throw Error(Errc::UnknownGraphDesignator, "certificate lacks a graph or pattern line");
  }
  return doc;
}

EdgeMapping load_certificate_mapping(const CertificateDocument& doc) {
  EdgeMapping f{share(resolve_designator(doc.graph)), share(resolve_designator(doc.pattern)), {}};
  const std::size_t m = f.source->edge_count();
  constexpr EdgeId unset = static_cast<EdgeId>(-1);
  f.image.assign(m, unset);
  for (const auto& [e, x] : doc.map) {
    if (e >= m) throw Error(Errc::MappingNotTotal, "map line for edge " + std::to_string(e) + " outside E(G)");
    if (f.image[e] != unset) throw Error(Errc::MappingNotTotal, "edge " + std::to_string(e) + " mapped twice");
    f.image[e] = x;
  }
  const auto missing = std::find(f.image.begin(), f.image.end(), unset);
  if (missing != f.image.end()) {
    throw Error(Errc::MappingNotTotal,
                "no map line for edge " + std::to_string(std::distance(f.image.begin(), missing)));
  }
  for (EdgeId e = 0; e < m; ++e) {
    if (f.image[e] >= f.target->edge_count()) {
      throw Error(Errc::MappingNotTotal, "edge " + std::to_string(e) + " maps outside E(H)");
    }
  }
  return f;
}

EdgeMapping read_certificate(std::string_view text) {
  const CertificateDocument doc = parse_certificate(text);
  EdgeMapping f = load_certificate_mapping(doc);
  if (auto r = verify(f); !r) throw Error(Errc::NotACertificate, r.detail);
  if (!doc.vmap.empty()) {
    const auto fv = induced_vertex_map(f);
    for (const auto& [v, u] : doc.vmap) {
      if (v >= fv.image.size() || fv.image[v] != u) {
        // Ambiguous stars may legitimately resolve to another vertex with the same star.
        if (v >= fv.image.size() || u >= f.target->vertex_count() ||
            star(*f.target, u) != star(*f.target, fv.image[v])) {
          throw Error(Errc::NotACertificate, "vmap line for vertex " + std::to_string(v) + " disagrees with the mapping");
        }
      }
    }
  }
  return f;
}

}  // namespace hcolor::formats
