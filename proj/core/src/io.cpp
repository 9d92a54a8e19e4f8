#include "triameter/io.hpp"

#include <cctype>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>

#include "triameter/error.hpp"

namespace triameter {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;
constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::uint64_t read_bigendian(std::string_view bytes) {
  std::uint64_t x = 0;
  for (char c : bytes) x = (x << 6) | static_cast<std::uint64_t>(static_cast<unsigned char>(c) - kBias);
  return x;
}

void append_bigendian(std::string& out, std::uint64_t x, int groups) {
  for (int k = groups - 1; k >= 0; --k) out.push_back(static_cast<char>(((x >> (6 * k)) & 0x3F) + kBias));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_failure(int line, const std::string& what) {
  throw Error(Errc::SourceParse, "line " + std::to_string(line) + ": " + what);
}

} // namespace

Graph parse_graph6(std::string_view text) {
  text = trim_line_end(text);
  if (text.starts_with(">>")) {
    if (!text.starts_with(kHeader)) throw Error(Errc::BadHeader, "expected \">>graph6<<\"");
    text.remove_prefix(kHeader.size());
  }
  if (text.empty()) throw Error(Errc::TruncatedPayload, "missing order byte");
  for (std::size_t i = 0; i < text.size(); ++i) {
    int c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > kMaxByte) {
      throw Error(Errc::BadChar, "byte " + std::to_string(c) + " at offset " + std::to_string(i));
    }
  }

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (static_cast<unsigned char>(text[0]) != kMaxByte) {
    n = static_cast<std::uint64_t>(text[0] - kBias);
    pos = 1;
  } else if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == kMaxByte) {
    if (text.size() < 8) throw Error(Errc::TruncatedPayload, "incomplete 36-bit order");
    n = read_bigendian(text.substr(2, 6));
    pos = 8;
  } else {
    if (text.size() < 4) throw Error(Errc::TruncatedPayload, "incomplete 18-bit order");
    n = read_bigendian(text.substr(1, 3));
    pos = 4;
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t need = (bits + 5) / 6;
  const std::uint64_t have = text.size() - pos;
  if (have < need) {
    throw Error(Errc::TruncatedPayload, "expected " + std::to_string(need) + " payload bytes, found " + std::to_string(have));
  }
  if (have > need) {
    throw Error(Errc::TruncatedPayload, "payload has " + std::to_string(have - need) + " trailing bytes");
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(kMaxByte));
    append_bigendian(out, n, 3);
  } else {
    out.push_back(static_cast<char>(kMaxByte));
    out.push_back(static_cast<char>(kMaxByte));
    append_bigendian(out, n, 6);
  }

  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

GraphFormat sniff_format(std::string_view first_line) {
  auto t = trim(first_line);
  if (!t.empty() && std::isdigit(static_cast<unsigned char>(t.front()))) return GraphFormat::EdgeList;
  return GraphFormat::Graph6;
}

std::vector<Graph> read_graphs(std::istream& in, GraphFormat format) {
  std::vector<Graph> graphs;
  std::string line;
  int lineno = 0;

  if (format == GraphFormat::Graph6) {
    while (std::getline(in, line)) {
      ++lineno;
      auto t = trim(line);
      if (t.empty()) continue;
      try {
        graphs.push_back(parse_graph6(t));
      } catch (const Error& e) {
        parse_failure(lineno, e.what());
      }
    }
    return graphs;
  }

  auto next_meaningful = [&](std::string_view& out) {
    while (std::getline(in, line)) {
      ++lineno;
      out = trim(line);
      if (!out.empty() && out.front() != '#') return true;
    }
    return false;
  };

  std::string_view t;
  while (next_meaningful(t)) {
    std::istringstream header{std::string(t)};
    long n = -1;
    long m = -1;
    std::string extra;
    if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0) {
      parse_failure(lineno, "expected header \"n m\"");
    }
    const int header_line = lineno;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long e = 0; e < m; ++e) {
      if (!next_meaningful(t)) parse_failure(lineno, "expected " + std::to_string(m) + " edges, got " + std::to_string(e));
      std::istringstream row{std::string(t)};
      long u = -1;
      long v = -1;
      if (!(row >> u >> v) || (row >> extra)) parse_failure(lineno, "expected edge \"u v\"");
      if (u < 0 || v < 0 || u >= n || v >= n) parse_failure(lineno, "endpoint outside 0.." + std::to_string(n - 1));
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    try {
      graphs.push_back(Graph::from_edge_list(static_cast<int>(n), edges));
    } catch (const Error& e) {
      parse_failure(header_line, e.what());
    }
  }
  return graphs;
}

} // namespace triameter
