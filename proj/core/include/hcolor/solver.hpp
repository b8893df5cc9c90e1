#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hcolor/coloring.hpp"

namespace hcolor {

enum class OrderHeuristic { Bfs, MostConstrained };

struct SolveOptions {
  std::optional<std::uint64_t> node_limit;           // unset: unlimited
  std::optional<std::chrono::milliseconds> time_limit;  // unset: unlimited
  OrderHeuristic order = OrderHeuristic::MostConstrained;
  bool collect_stats = true;
  // Only canonical images of the first branched star modulo permutations of parallel target edges.
  bool break_parallel_symmetry = false;
  // Restrict bridges of G to bridges of H before searching.
  bool bridge_rule = true;
};

enum class SolveStatus { Colorable, NotColorable, ResourceLimit };

std::string_view to_string(SolveStatus status) noexcept;

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t max_depth = 0;
  std::chrono::duration<double, std::milli> wall{0};
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::ResourceLimit;
  std::optional<EdgeMapping> certificate;  // present iff Colorable
  SearchStats stats;
};

/// Exact search for an H-colouring of G (H = pattern colours G = graph).
///
/// Branches on whole vertex stars: a vertex v of G is given an image vertex u of
/// H of the same degree together with a bijection from the star of v onto the
/// star of u that agrees with every edge image already fixed. The unassigned
/// vertex with the fewest surviving choices is branched on first; any vertex
/// with none left is a dead end. NotColorable is only reported after the whole
/// space was exhausted.
SolveOutcome solve(const GraphRef& g, const GraphRef& h, const SolveOptions& opts = {});

struct Enumeration {
  std::vector<EdgeMapping> certificates;
  bool exhaustive = false;  // true iff the search space was fully explored
  bool limit_hit = false;   // node or time limit interrupted the search
  SearchStats stats;
};

/// Up to `limit` distinct certificates, in search order.
Enumeration enumerate(const GraphRef& g, const GraphRef& h, const SolveOptions& opts, std::size_t limit);

}  // namespace hcolor
