#include <cctype>
#include <istream>
#include <sstream>
#include <string>

#include "hcolor/formats.hpp"

namespace hcolor::formats {
namespace {

constexpr int kBias = 63;

[[noreturn]] void malformed(std::size_t offset, const std::string& why) {
  throw Error(Errc::MalformedEncoding, why + " at byte " + std::to_string(offset));
}

std::string_view trim_line(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

// Reads N(n) starting at pos; advances pos.
std::size_t read_size(std::string_view s, std::size_t& pos) {
  auto byte = [&](std::size_t i) -> int {
    if (i >= s.size()) malformed(i, "truncated vertex count");
    int c = static_cast<unsigned char>(s[i]);
    if (c < kBias || c > 126) malformed(i, "byte outside 63..126");
    return c - kBias;
  };
  int first = byte(pos);
  if (first < 63) {
    pos += 1;
    return static_cast<std::size_t>(first);
  }
  if (byte(pos + 1) < 63) {
    std::size_t n = 0;
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(byte(pos + i));
    pos += 4;
    return n;
  }
  std::size_t n = 0;
  for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::size_t>(byte(pos + i));
  pos += 8;
  return n;
}

void write_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

class BitWriter {
public:
  void put(bool bit) {
    acc_ = (acc_ << 1) | (bit ? 1 : 0);
    if (--room_ == 0) flush();
  }
  void put(std::size_t value, int width) {
    for (int i = width - 1; i >= 0; --i) put(((value >> i) & 1) != 0);
  }
  int room() const { return room_; }
  bool partial() const { return room_ != 6; }
  std::string& out() { return out_; }

  void flush() {
    out_.push_back(static_cast<char>(acc_ + kBias));
    acc_ = 0;
    room_ = 6;
  }

private:
  std::string out_;
  int acc_ = 0;
  int room_ = 6;
};

int bits_for(std::size_t n) {
  int k = 0;
  for (std::size_t i = n == 0 ? 0 : n - 1; i > 0; i >>= 1) ++k;
  return k;
}

}  // namespace

MultiGraph parse_graph6(std::string_view line) {
  line = trim_line(line);
  std::size_t header = 0;
  if (line.starts_with(">>graph6<<")) header = 10;
  std::size_t pos = header;
  const std::size_t n = read_size(line, pos);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - pos != bytes) {
    malformed(pos, "expected " + std::to_string(bytes) + " adjacency bytes, found " + std::to_string(line.size() - pos));
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::size_t k = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + k / 6;
      const int c = static_cast<unsigned char>(line[at]);
      if (c < kBias || c > 126) malformed(at, "byte outside 63..126");
      if (((c - kBias) >> (5 - k % 6)) & 1) pairs.emplace_back(i, j);
    }
  }
  for (std::size_t at = pos; at < line.size(); ++at) {
    const int c = static_cast<unsigned char>(line[at]);
    if (c < kBias || c > 126) malformed(at, "byte outside 63..126");
  }
  return MultiGraph::build(n, pairs);
}

std::string write_graph6(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) {
    if (adj[e.a][e.b]) throw Error(Errc::MalformedEncoding, "graph6 cannot express parallel edges");
    adj[e.a][e.b] = adj[e.b][e.a] = true;
  }
  BitWriter w;
  write_size(w.out(), n);
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) w.put(adj[i][j]);
  }
  while (w.partial()) w.put(false);
  return w.out();
}

MultiGraph parse_sparse6(std::string_view line) {
  line = trim_line(line);
  std::size_t pos = 0;
  if (line.starts_with(">>sparse6<<")) pos = 11;
  if (pos >= line.size() || line[pos] != ':') malformed(pos, "sparse6 must start with ':'");
  ++pos;
  const std::size_t n = read_size(line, pos);
  const int width = bits_for(n);

  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::size_t v = 0;
  int x = 0;
  int left = 0;  // unread bits of x
  auto next_byte = [&]() -> bool {
    if (pos >= line.size()) return false;
    const int c = static_cast<unsigned char>(line[pos]);
    if (c < kBias || c > 126) malformed(pos, "byte outside 63..126");
    ++pos;
    x = c - kBias;
    left = 6;
    return true;
  };

  for (;;) {
    if (left == 0 && !next_byte()) break;
    const bool b = (x >> (left - 1)) & 1;
    --left;
    std::size_t value = 0;
    int need = width;
    bool complete = true;
    while (need > 0) {
      if (left == 0 && !next_byte()) {
        complete = false;
        break;
      }
      const int take = std::min(need, left);
      value = (value << take) | static_cast<std::size_t>((x >> (left - take)) & ((1 << take) - 1));
      left -= take;
      need -= take;
    }
    if (!complete) break;
    if (b) ++v;
    if (v >= n) break;
    if (value > v) {
      v = value;
    } else {
      if (value == v) {
        throw Error(Errc::LoopRejected, "sparse6 loop at vertex " + std::to_string(v));
      }
      pairs.emplace_back(static_cast<VertexId>(value), static_cast<VertexId>(v));
    }
  }
  return MultiGraph::build(n, pairs);
}

std::string write_sparse6(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  const int width = bits_for(n);
  const MultiGraph ordered = canonical_edge_order(g).first;

  BitWriter w;
  w.out().push_back(':');
  write_size(w.out(), n);
  std::size_t last = 0;
  for (const auto& e : ordered.edges()) {
    const std::size_t lo = e.a, hi = e.b;  // canonical order stores (min, max)
    if (hi == last) {
      w.put(false);
      w.put(lo, width);
    } else if (hi == last + 1) {
      w.put(true);
      w.put(lo, width);
      last = hi;
    } else {
      w.put(true);
      w.put(hi, width);
      w.put(false);
      w.put(lo, width);
      last = hi;
    }
  }
  if (w.partial()) {
    // A run of 1-bits could otherwise decode as a spurious edge into vertex n-1.
    const int room = w.room();
    const bool guard = room >= width + 1 && last + 2 == n && n == (std::size_t{1} << width);
    if (guard) w.put(false);
    while (w.partial()) w.put(true);
  }
  return w.out();
}

MultiGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t n = 0, m = 0;
  bool have_header = false;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto view = trim_line(line);
    if (view.empty() || view == "c" || view.starts_with("c ")) continue;
    std::istringstream fields{std::string(view)};
    long long a = -1, b = -1;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra) || a < 0 || b < 0) {
      throw Error(Errc::MalformedEncoding, "edge list line " + std::to_string(line_no) + " is not two integers");
    }
    if (!have_header) {
      n = static_cast<std::size_t>(a);
      m = static_cast<std::size_t>(b);
      have_header = true;
    } else {
      pairs.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
  }
  if (!have_header) throw Error(Errc::MalformedEncoding, "edge list without header");
  if (pairs.size() != m) {
    throw Error(Errc::MalformedEncoding, "edge list declares " + std::to_string(m) + " edges but has " +
                                             std::to_string(pairs.size()));
  }
  return MultiGraph::build(n, pairs);
}

std::string write_edge_list(const MultiGraph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.a) + " " + std::to_string(e.b) + "\n";
  return out;
}

MultiGraph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto view = trim_line(line);
    if (view.empty() || view == "c" || view.starts_with("c ")) continue;
    if (view.starts_with(":") || view.starts_with(">>sparse6<<")) return parse_sparse6(view);
    std::istringstream fields{std::string(view)};
    long long a, b;
    std::string extra;
    if ((fields >> a >> b) && !(fields >> extra)) return parse_edge_list(text);
    return parse_graph6(view);
  }
  throw Error(Errc::MalformedEncoding, "no graph found");
}

std::vector<std::string> graph_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto view = trim_line(line);
    if (view.empty() || view == "c" || view.starts_with("c ")) continue;
    out.emplace_back(view);
  }
  return out;
}

}  // namespace hcolor::formats
