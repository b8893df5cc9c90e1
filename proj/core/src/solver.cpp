#include "hcolor/solver.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

namespace hcolor {

std::string_view to_string(SolveStatus status) noexcept {
  switch (status) {
    case SolveStatus::Colorable: return "COLORABLE";
    case SolveStatus::NotColorable: return "NOT_COLORABLE";
    case SolveStatus::ResourceLimit: return "RESOURCE_LIMIT";
  }
  return "?";
}

namespace {

constexpr EdgeId kUnset = std::numeric_limits<EdgeId>::max();
constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

struct Choice {
  VertexId target;
  std::vector<EdgeId> images;  // parallel to g.incident(v)
};

class Searcher {
public:
  Searcher(const GraphRef& g, const GraphRef& h, const SolveOptions& opts, std::size_t want)
      : g_(g), h_(h), gg_(*g), hh_(*h), opts_(opts), want_(want) {
    const std::size_t max_deg = std::max(gg_.max_degree(), hh_.max_degree());
    by_degree_.resize(max_deg + 1);
    // Vertices of H with the same star give the same edge maps; keep the lowest.
    std::set<EdgeIdSet> stars_seen;
    for (VertexId u = 0; u < hh_.vertex_count(); ++u) {
      if (stars_seen.insert(star(hh_, u)).second) by_degree_[hh_.degree(u)].push_back(u);
    }

    // An edge of H is a possible image of an edge of G only if its endpoints can
    // host both endpoints' degrees (both ends may land on the same vertex of H).
    std::vector<bool> g_bridge(gg_.edge_count(), false), h_bridge(hh_.edge_count(), false);
    if (opts_.bridge_rule) {
      for (EdgeId e : bridges(gg_)) g_bridge[e] = true;
      for (EdgeId e : bridges(hh_)) h_bridge[e] = true;
    }
    allowed_.assign(gg_.edge_count(), std::vector<bool>(hh_.edge_count(), false));
    for (EdgeId e = 0; e < gg_.edge_count(); ++e) {
      const auto& ge = gg_.endpoints(e);
      const auto da = gg_.degree(ge.a), db = gg_.degree(ge.b);
      for (EdgeId x = 0; x < hh_.edge_count(); ++x) {
        if (g_bridge[e] && !h_bridge[x]) continue;
        const auto& he = hh_.endpoints(x);
        const auto ha = hh_.degree(he.a), hb = hh_.degree(he.b);
        allowed_[e][x] = (da == ha || da == hb) && (db == ha || db == hb);
      }
    }

    if (opts_.break_parallel_symmetry) {
      parallel_rank_.assign(hh_.edge_count(), 0);
      parallel_first_.assign(hh_.edge_count(), 0);
      for (EdgeId x = 0; x < hh_.edge_count(); ++x) {
        const auto& ex = hh_.endpoints(x);
        parallel_first_[x] = x;
        std::uint32_t rank = 0;
        for (EdgeId y = 0; y < x; ++y) {
          const auto& ey = hh_.endpoints(y);
          if ((ey.a == ex.a && ey.b == ex.b) || (ey.a == ex.b && ey.b == ex.a)) {
            if (rank == 0) parallel_first_[x] = y;
            ++rank;
          }
        }
        parallel_rank_[x] = rank;
      }
    }

    if (opts_.order == OrderHeuristic::Bfs) bfs_order();

    image_.assign(gg_.edge_count(), kUnset);
    vertex_image_.assign(gg_.vertex_count(), kNoVertex);
  }

  Enumeration run() {
    start_ = std::chrono::steady_clock::now();
    Enumeration out;
    bool complete = true;
    try {
      search(0);
    } catch (const Stop&) {
      complete = false;
    }
    out.certificates = std::move(found_);
    out.limit_hit = limit_hit_;
    out.exhaustive = complete && !limit_hit_;
    out.stats = stats_;
    out.stats.wall = std::chrono::steady_clock::now() - start_;
    return out;
  }

private:
  struct Stop {};

  void bfs_order() {
    std::vector<bool> seen(gg_.vertex_count(), false);
    for (VertexId s = 0; s < gg_.vertex_count(); ++s) {
      if (seen[s]) continue;
      std::deque<VertexId> queue{s};
      seen[s] = true;
      while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        order_.push_back(v);
        for (EdgeId e : gg_.incident(v)) {
          VertexId w = gg_.endpoints(e).other(v);
          if (!seen[w]) {
            seen[w] = true;
            queue.push_back(w);
          }
        }
      }
    }
  }

  // Can edge e (at v, heading to w) take image x given the current partial assignment?
  bool edge_accepts(VertexId v, EdgeId e, EdgeId x) const {
    if (!allowed_[e][x]) return false;
    if (image_[e] != kUnset) return image_[e] == x;
    const VertexId w = gg_.endpoints(e).other(v);
    for (EdgeId f : gg_.incident(w)) {
      if (f != e && image_[f] == x) return false;
    }
    return true;
  }

  // Enumerates choices for v; visit returns false to stop early.
  void for_each_choice(VertexId v, bool canonical_only, const std::function<bool(const Choice&)>& visit) const {
    const auto inc = gg_.incident(v);
    const std::size_t d = inc.size();
    if (d >= by_degree_.size()) return;
    Choice choice;
    choice.images.resize(d);
    std::vector<bool> taken;
    bool stop = false;

    for (VertexId u : by_degree_[d]) {
      const auto target = hh_.incident(u);
      choice.target = u;
      taken.assign(d, false);
      std::function<void(std::size_t)> fill = [&](std::size_t i) {
        if (stop) return;
        if (i == d) {
          if (!canonical_only || canonical(choice.images)) stop = !visit(choice);
          return;
        }
        for (std::size_t j = 0; j < d && !stop; ++j) {
          if (taken[j] || !edge_accepts(v, inc[i], target[j])) continue;
          taken[j] = true;
          choice.images[i] = target[j];
          fill(i + 1);
          taken[j] = false;
        }
      };
      fill(0);
      if (stop) return;
    }
  }

  // Within every class of parallel target edges, the members used must be the
  // lowest ones, in the order the star of v uses them.
  bool canonical(const std::vector<EdgeId>& images) const {
    for (std::size_t i = 0; i < images.size(); ++i) {
      std::uint32_t earlier = 0;
      for (std::size_t j = 0; j < i; ++j) {
        if (parallel_first_[images[j]] == parallel_first_[images[i]]) ++earlier;
      }
      if (parallel_rank_[images[i]] != earlier) return false;
    }
    return true;
  }

  std::size_t count_choices(VertexId v, std::size_t cap) const {
    std::size_t n = 0;
    for_each_choice(v, false, [&](const Choice&) { return ++n < cap; });
    return n;
  }

  // Returns the vertex to branch on, kNoVertex when all are assigned, or sets
  // dead_end when some unassigned vertex has no choice left.
  VertexId pick(bool& dead_end) const {
    dead_end = false;
    if (opts_.order == OrderHeuristic::Bfs) {
      for (VertexId v : order_) {
        if (vertex_image_[v] == kNoVertex) return v;
      }
      return kNoVertex;
    }
    VertexId best = kNoVertex;
    std::size_t best_count = std::numeric_limits<std::size_t>::max();
    for (VertexId v = 0; v < gg_.vertex_count(); ++v) {
      if (vertex_image_[v] != kNoVertex) continue;
      const std::size_t c = count_choices(v, best_count);
      if (c == 0) {
        dead_end = true;
        return v;
      }
      if (c < best_count) {
        best_count = c;
        best = v;
      }
    }
    return best;
  }

  void check_limits() {
    if (opts_.node_limit && stats_.nodes >= *opts_.node_limit) {
      limit_hit_ = true;
      throw Stop{};
    }
    if (opts_.time_limit && (stats_.nodes & 0xff) == 0 &&
        std::chrono::steady_clock::now() - start_ > *opts_.time_limit) {
      limit_hit_ = true;
      throw Stop{};
    }
  }

  void record_solution() {
    found_.push_back(EdgeMapping{g_, h_, image_});
    if (found_.size() >= want_) throw Stop{};
  }

  void search(std::uint64_t depth) {
    check_limits();
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);

    bool dead_end = false;
    const VertexId v = pick(dead_end);
    if (dead_end) return;
    if (v == kNoVertex) {
      record_solution();
      return;
    }

    std::vector<Choice> choices;
    for_each_choice(v, opts_.break_parallel_symmetry && depth == 0, [&](const Choice& c) {
      choices.push_back(c);
      return true;
    });

    const auto inc = gg_.incident(v);
    std::vector<EdgeId> newly_fixed;
    for (const Choice& c : choices) {
      vertex_image_[v] = c.target;
      newly_fixed.clear();
      for (std::size_t i = 0; i < inc.size(); ++i) {
        if (image_[inc[i]] == kUnset) {
          image_[inc[i]] = c.images[i];
          newly_fixed.push_back(inc[i]);
        }
      }
      search(depth + 1);
      for (EdgeId e : newly_fixed) image_[e] = kUnset;
      vertex_image_[v] = kNoVertex;
    }
  }

  GraphRef g_, h_;
  const MultiGraph& gg_;
  const MultiGraph& hh_;
  SolveOptions opts_;
  std::size_t want_;

  std::vector<std::vector<VertexId>> by_degree_;
  std::vector<std::vector<bool>> allowed_;
  std::vector<std::uint32_t> parallel_rank_;
  std::vector<EdgeId> parallel_first_;
  std::vector<VertexId> order_;

  std::vector<EdgeId> image_;
  std::vector<VertexId> vertex_image_;
  std::vector<EdgeMapping> found_;
  SearchStats stats_;
  bool limit_hit_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

Enumeration enumerate(const GraphRef& g, const GraphRef& h, const SolveOptions& opts, std::size_t limit) {
  if (!g || !h) throw std::invalid_argument("enumerate needs both graphs");
  if (limit == 0) throw std::invalid_argument("enumerate limit must be at least 1");
  Enumeration result = Searcher(g, h, opts, limit).run();
  for (const auto& cert : result.certificates) {
    if (auto report = verify(cert); !report) {
      throw std::logic_error("solver produced a mapping that fails verification: " + report.detail);
    }
  }
  if (!opts.collect_stats) result.stats = SearchStats{};
  return result;
}

SolveOutcome solve(const GraphRef& g, const GraphRef& h, const SolveOptions& opts) {
  Enumeration run = enumerate(g, h, opts, 1);
  SolveOutcome out;
  out.stats = run.stats;
  if (!run.certificates.empty()) {
    out.status = SolveStatus::Colorable;
    out.certificate = std::move(run.certificates.front());
  } else if (run.exhaustive) {
    out.status = SolveStatus::NotColorable;
  } else {
    out.status = SolveStatus::ResourceLimit;
  }
  return out;
}

}  // namespace hcolor
