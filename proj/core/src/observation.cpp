#include "hcolor/observation.hpp"

#include <algorithm>
#include <string>

namespace hcolor {
namespace {

std::string describe(const std::vector<EdgeId>& edges) {
  std::string out = "{";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(edges[i]);
  }
  return out + "}";
}

struct Checker {
  const MultiGraph& g;
  const MultiGraph& h;
  const std::vector<EdgeId>& image;
  PropertyReport& report;

  std::vector<EdgeId> preimage(const std::vector<EdgeId>& target_edges) const {
    std::vector<bool> in(h.edge_count(), false);
    for (EdgeId x : target_edges) in[x] = true;
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < image.size(); ++e) {
      if (in[image[e]]) out.push_back(e);
    }
    return out;
  }

  // regularity < 0: H' is not regular, skip (i).
  void test(const std::string& what, const std::vector<EdgeId>& sub, long regularity, std::size_t colours) {
    ++report.subgraphs_tested;
    const auto pre = preimage(sub);
    if (pre.empty()) return;
    const auto induced = edge_induced_subgraph(g, pre);
    if (regularity >= 0 && !is_k_regular(induced.graph, static_cast<std::size_t>(regularity))) {
      report.regular_preimages = false;
      report.witnesses.push_back("(i) preimage of " + what + " " + describe(sub) + " is not " +
                                 std::to_string(regularity) + "-regular");
    }
    const auto needed = chromatic_index(induced.graph);
    if (needed > colours) {
      report.chromatic_bound = false;
      report.witnesses.push_back("(ii) preimage of " + what + " " + describe(sub) + " needs " +
                                 std::to_string(needed) + " colours, more than " + std::to_string(colours));
    }
  }
};

}  // namespace

PropertyReport check_observation1(const EdgeMapping& f, std::size_t circuit_cap) {
  if (auto r = verify(f); !r) throw Error(Errc::NotACertificate, r.detail);
  const MultiGraph& g = *f.source;
  const MultiGraph& h = *f.target;
  PropertyReport report;
  Checker check{g, h, f.image, report};

  for (EdgeId x = 0; x < h.edge_count(); ++x) check.test("edge", {x}, 1, 1);

  try {
    for_each_circuit(
        h,
        [&](std::span<const EdgeId> circuit) {
          std::vector<EdgeId> edges(circuit.begin(), circuit.end());
          std::sort(edges.begin(), edges.end());
          check.test("circuit", edges, 2, edges.size() % 2 == 0 ? 2 : 3);
        },
        circuit_cap);
  } catch (const Error& e) {
    if (e.code() != Errc::ResourceLimit) throw;
    report.circuit_family_truncated = true;
  }

  for (VertexId u = 0; u < h.vertex_count(); ++u) {
    auto s = star(h, u);
    if (!s.empty()) check.test("star", s, -1, s.size());
  }

  if (h.edge_count() > 0 && h.vertex_count() > 0) {
    const auto k = h.degree(0);
    if (is_k_regular(h, k)) {
      std::vector<EdgeId> all(h.edge_count());
      for (EdgeId x = 0; x < all.size(); ++x) all[x] = x;
      check.test("whole target", all, static_cast<long>(k), chromatic_index(h));
    }
  }

  std::vector<bool> h_bridge(h.edge_count(), false);
  for (EdgeId x : bridges(h)) h_bridge[x] = true;
  for (EdgeId e : bridges(g)) {
    if (!h_bridge[f.image[e]]) {
      report.bridges_to_bridges = false;
      report.witnesses.push_back("(iii) bridge " + std::to_string(e) + " maps to non-bridge " +
                                 std::to_string(f.image[e]));
    }
  }
  return report;
}

bool two_circuit_preimages_even(const EdgeMapping& f) {
  const MultiGraph& g = *f.source;
  const MultiGraph& h = *f.target;
  const auto doubled = two_circuit_edges(h);
  for (EdgeId x : doubled) {
    for (EdgeId y : doubled) {
      if (y <= x) continue;
      const auto& ex = h.endpoints(x);
      const auto& ey = h.endpoints(y);
      if (!(ex.touches(ey.a) && ex.touches(ey.b))) continue;
      std::vector<EdgeId> pre;
      for (EdgeId e = 0; e < f.image.size(); ++e) {
        if (f.image[e] == x || f.image[e] == y) pre.push_back(e);
      }
      if (pre.empty()) continue;
      const auto induced = edge_induced_subgraph(g, pre);
      if (!is_k_regular(induced.graph, 2)) return false;
      for (const auto& part : connected_components(induced.graph)) {
        if (part.size() % 2 != 0) return false;
      }
    }
  }
  return true;
}

}  // namespace hcolor
