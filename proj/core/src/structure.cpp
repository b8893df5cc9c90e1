#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "hcolor/multigraph.hpp"

namespace hcolor {

EdgeIdSet star(const MultiGraph& g, VertexId v) {
  auto inc = g.incident(v);
  return {inc.begin(), inc.end()};
}

InducedSubgraph edge_induced_subgraph(const MultiGraph& g, std::span<const EdgeId> edges) {
  std::vector<EdgeId> kept(edges.begin(), edges.end());
  for (EdgeId e : kept) {
    if (e >= g.edge_count()) throw Error(Errc::EdgeOutOfRange, "edge " + std::to_string(e));
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

  std::vector<bool> used(g.vertex_count(), false);
  for (EdgeId e : kept) {
    used[g.endpoints(e).a] = true;
    used[g.endpoints(e).b] = true;
  }
  InducedSubgraph out;
  std::vector<VertexId> local(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (used[v]) {
      local[v] = static_cast<VertexId>(out.parent_vertex.size());
      out.parent_vertex.push_back(v);
    }
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(kept.size());
  for (EdgeId e : kept) {
    const auto& ep = g.endpoints(e);
    pairs.emplace_back(local[ep.a], local[ep.b]);
  }
  out.graph = MultiGraph::build(out.parent_vertex.size(), pairs);
  out.parent_edge = std::move(kept);
  return out;
}

MultiGraph remove_edges(const MultiGraph& g, std::span<const EdgeId> edges) {
  std::vector<bool> drop(g.edge_count(), false);
  for (EdgeId e : edges) {
    if (e >= g.edge_count()) throw Error(Errc::EdgeOutOfRange, "edge " + std::to_string(e));
    drop[e] = true;
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!drop[e]) pairs.emplace_back(g.endpoints(e).a, g.endpoints(e).b);
  }
  return MultiGraph::build(g.vertex_count(), pairs);
}

std::vector<std::vector<VertexId>> connected_components(const MultiGraph& g) {
  std::vector<std::vector<VertexId>> parts;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    auto& part = parts.emplace_back();
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      part.push_back(v);
      for (EdgeId e : g.incident(v)) {
        VertexId w = g.endpoints(e).other(v);
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(part.begin(), part.end());
  }
  return parts;
}

bool is_connected(const MultiGraph& g) { return connected_components(g).size() <= 1; }

EdgeIdSet bridges(const MultiGraph& g) {
  // Lowlink DFS that skips the tree edge by id, not by parent vertex, so a
  // parallel partner of the tree edge counts as a back edge.
  constexpr std::uint32_t unvisited = 0;
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> disc(n, unvisited), low(n, 0);
  std::uint32_t clock = 0;
  EdgeIdSet out;

  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  constexpr EdgeId none = static_cast<EdgeId>(-1);
  std::vector<Frame> stack;

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != unvisited) continue;
    disc[root] = low[root] = ++clock;
    stack.push_back({root, none, 0});
    while (!stack.empty()) {
      Frame& top = stack.back();
      auto inc = g.incident(top.v);
      if (top.next < inc.size()) {
        EdgeId e = inc[top.next++];
        if (e == top.via) continue;
        VertexId w = g.endpoints(e).other(top.v);
        if (disc[w] == unvisited) {
          disc[w] = low[w] = ++clock;
          stack.push_back({w, e, 0});
        } else {
          low[top.v] = std::min(low[top.v], disc[w]);
        }
        continue;
      }
      Frame done = top;
      stack.pop_back();
      if (!stack.empty()) {
        VertexId parent = stack.back().v;
        low[parent] = std::min(low[parent], low[done.v]);
        if (low[done.v] > disc[parent]) out.push_back(done.via);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_k_regular(const MultiGraph& g, std::size_t k) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != k) return false;
  }
  return true;
}

EdgeIdSet two_circuit_edges(const MultiGraph& g) {
  EdgeIdSet out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ep = g.endpoints(e);
    for (EdgeId f : g.incident(ep.a)) {
      if (f != e && g.endpoints(f).touches(ep.b)) {
        out.push_back(e);
        break;
      }
    }
  }
  return out;
}

void for_each_circuit(const MultiGraph& g, const std::function<void(std::span<const EdgeId>)>& visit,
                      std::size_t cap) {
  // Each circuit is reported once: its smallest vertex is the start, and it is
  // walked in the direction whose first edge id is below the closing edge id.
  const std::size_t n = g.vertex_count();
  std::vector<bool> on_path(n, false);
  std::vector<EdgeId> path;
  std::size_t found = 0;

  auto report = [&](EdgeId closing) {
    if (++found > cap) {
      throw Error(Errc::ResourceLimit, "more than " + std::to_string(cap) + " circuits");
    }
    path.push_back(closing);
    visit(path);
    path.pop_back();
  };

  std::function<void(VertexId, VertexId)> extend = [&](VertexId start, VertexId v) {
    for (EdgeId e : g.incident(v)) {
      if (!path.empty() && e == path.back()) continue;
      VertexId w = g.endpoints(e).other(v);
      if (w == start) {
        if (!path.empty() && e > path.front()) report(e);
        continue;
      }
      if (w < start || on_path[w]) continue;
      on_path[w] = true;
      path.push_back(e);
      extend(start, w);
      path.pop_back();
      on_path[w] = false;
    }
  };

  for (VertexId s = 0; s < n; ++s) {
    on_path[s] = true;
    extend(s, s);
    on_path[s] = false;
  }
}

CircuitSummary circuit_summary(const MultiGraph& g, std::size_t cap) {
  CircuitSummary out;
  std::vector<bool> length_seen(g.vertex_count() + 1, false);
  for_each_circuit(
      g,
      [&](std::span<const EdgeId> edges) {
        ++out.count;
        length_seen[edges.size()] = true;
      },
      cap);
  for (std::size_t len = 0; len < length_seen.size(); ++len) {
    if (length_seen[len]) out.lengths.push_back(len);
  }
  return out;
}

std::vector<std::size_t> circuit_lengths(const MultiGraph& g, std::size_t cap) {
  return circuit_summary(g, cap).lengths;
}

bool is_proper_edge_coloring(const MultiGraph& g, std::span<const std::uint32_t> color) {
  if (color.size() != g.edge_count()) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        if (color[inc[i]] == color[inc[j]]) return false;
      }
    }
  }
  return true;
}

std::optional<EdgeColoring> edge_coloring_with(const MultiGraph& g, std::size_t k) {
  const std::size_t m = g.edge_count();
  if (m == 0) return EdgeColoring{0, {}};
  if (k < g.max_degree()) return std::nullopt;
  if (k > 64) throw Error(Errc::ResourceLimit, "edge coloring limited to 64 colors");

  constexpr std::uint32_t uncolored = static_cast<std::uint32_t>(-1);
  const std::uint64_t palette = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  std::vector<std::uint64_t> used(g.vertex_count(), 0);
  std::vector<std::uint32_t> color(m, uncolored);

  auto available = [&](EdgeId e) {
    const auto& ep = g.endpoints(e);
    return palette & ~(used[ep.a] | used[ep.b]);
  };

  // Most-constrained edge first; a fresh color may only be the next unused one.
  std::function<bool(std::size_t, std::uint32_t)> search = [&](std::size_t colored,
                                                               std::uint32_t opened) -> bool {
    if (colored == m) return true;
    EdgeId pick = 0;
    int best = 65;
    for (EdgeId e = 0; e < m; ++e) {
      if (color[e] != uncolored) continue;
      int options = std::popcount(available(e));
      if (options < best) {
        best = options;
        pick = e;
        if (options == 0) return false;
      }
    }
    const auto& ep = g.endpoints(pick);
    std::uint64_t avail = available(pick);
    for (std::uint32_t c = 0; c < k && c <= opened; ++c) {
      if (!(avail >> c & 1)) continue;
      color[pick] = c;
      used[ep.a] |= std::uint64_t{1} << c;
      used[ep.b] |= std::uint64_t{1} << c;
      if (search(colored + 1, std::max(opened, c + 1))) return true;
      used[ep.a] &= ~(std::uint64_t{1} << c);
      used[ep.b] &= ~(std::uint64_t{1} << c);
      color[pick] = uncolored;
    }
    return false;
  };

  if (!search(0, 0)) return std::nullopt;
  return EdgeColoring{k, std::move(color)};
}

EdgeColoring optimal_edge_coloring(const MultiGraph& g) {
  if (g.edge_count() == 0) throw Error(Errc::EmptyGraph, "chromatic index of a graph without edges");
  for (std::size_t k = g.max_degree();; ++k) {
    if (auto found = edge_coloring_with(g, k)) return *std::move(found);
  }
}

std::size_t chromatic_index(const MultiGraph& g) { return optimal_edge_coloring(g).colors; }

bool is_perfect_matching(const MultiGraph& g, std::span<const EdgeId> matching) {
  std::vector<int> cover(g.vertex_count(), 0);
  for (EdgeId e : matching) {
    if (e >= g.edge_count()) return false;
    ++cover[g.endpoints(e).a];
    ++cover[g.endpoints(e).b];
  }
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

std::optional<EdgeIdSet> find_perfect_matching(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n % 2 != 0) return std::nullopt;
  std::vector<bool> covered(n, false);
  EdgeIdSet chosen;

  std::function<bool(VertexId)> search = [&](VertexId from) -> bool {
    VertexId v = from;
    while (v < n && covered[v]) ++v;
    if (v == n) return true;
    covered[v] = true;
    for (EdgeId e : g.incident(v)) {
      VertexId w = g.endpoints(e).other(v);
      if (covered[w]) continue;
      covered[w] = true;
      chosen.push_back(e);
      if (search(v + 1)) return true;
      chosen.pop_back();
      covered[w] = false;
    }
    covered[v] = false;
    return false;
  };

  if (!search(0)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  if (!is_perfect_matching(g, chosen)) {
    throw std::logic_error("perfect matching search produced an invalid matching");
  }
  return chosen;
}

std::vector<std::size_t> degree_sequence(const MultiGraph& g) {
  std::vector<std::size_t> out;
  out.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace hcolor
