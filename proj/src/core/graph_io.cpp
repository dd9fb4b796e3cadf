#include "core/graph_io.hpp"

#include <cctype>
#include <charconv>

#include <json.hpp>

#include "core/error.hpp"

namespace planex {
namespace {

constexpr std::size_t kMaxGraph6Vertices = 258047;

std::size_t parse_count(std::string_view text, std::size_t& pos) {
  auto byte = [&](std::size_t i) -> unsigned {
    require(i < text.size(), ErrorKind::Parse, "graph6: truncated size field");
    const unsigned c = static_cast<unsigned char>(text[i]);
    require(c >= 63 && c <= 126, ErrorKind::Parse, "graph6: byte out of range");
    return c - 63;
  };
  const unsigned first = byte(0);
  if (first != 63) {
    pos = 1;
    return first;
  }
  require(byte(1) != 63, ErrorKind::Parse, "graph6: 8-byte size field not supported");
  pos = 4;
  return (static_cast<std::size_t>(byte(1)) << 12) | (static_cast<std::size_t>(byte(2)) << 6) |
         byte(3);
}

std::size_t parse_size(std::string_view digits, std::string_view context) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  require(ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty(),
          ErrorKind::Parse, "bad number in graph descriptor '" + std::string(context) + "'");
  return value;
}

}  // namespace

Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  require(!text.empty(), ErrorKind::Parse, "graph6: empty input");

  std::size_t pos = 0;
  const std::size_t n = parse_count(text, pos);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  require(text.size() == pos + bytes, ErrorKind::Parse,
          "graph6: expected " + std::to_string(pos + bytes) + " bytes, got " +
              std::to_string(text.size()));

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const unsigned c = static_cast<unsigned char>(text[pos + bit / 6]);
      require(c >= 63 && c <= 126, ErrorKind::Parse, "graph6: byte out of range");
      if (((c - 63) >> (5 - bit % 6)) & 1u)
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  // Padding bits must be zero for the encoding to be canonical.
  if (bits % 6 != 0) {
    const unsigned last = static_cast<unsigned char>(text.back()) - 63;
    require((last & ((1u << (6 - bits % 6)) - 1)) == 0, ErrorKind::Parse,
            "graph6: nonzero padding bits");
  }
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.vertex_count();
  require(n <= kMaxGraph6Vertices, ErrorKind::Unsupported, "graph6: too many vertices");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  unsigned acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph graph_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("graph JSON: ") + e.what());
  }
  require(doc.is_object() && doc.contains("n") && doc.contains("edges"), ErrorKind::Parse,
          "graph JSON: expected {\"n\": int, \"edges\": [[u,v],...]}");
  require(doc["n"].is_number_unsigned() || (doc["n"].is_number_integer() && doc["n"].get<long long>() >= 0),
          ErrorKind::Parse, "graph JSON: n must be a nonnegative integer");
  const auto n = doc["n"].get<std::size_t>();
  std::vector<Edge> edges;
  for (const auto& pair : doc["edges"]) {
    require(pair.is_array() && pair.size() == 2 && pair[0].is_number_integer() &&
                pair[1].is_number_integer(),
            ErrorKind::Parse, "graph JSON: each edge must be [u, v]");
    const auto u = pair[0].get<long long>();
    const auto v = pair[1].get<long long>();
    require(u >= 0 && v >= 0, ErrorKind::InvalidArgument, "graph JSON: negative vertex index");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Graph(n, edges);
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.vertex_count();
  doc["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({e.u, e.v});
  return doc.dump();
}

Graph parse_graph_descriptor(std::string_view d) {
  while (!d.empty() && std::isspace(static_cast<unsigned char>(d.front()))) d.remove_prefix(1);
  while (!d.empty() && std::isspace(static_cast<unsigned char>(d.back()))) d.remove_suffix(1);
  require(!d.empty(), ErrorKind::Parse, "empty graph descriptor");

  if (d.front() == '{') return graph_from_json(d);
  if (d.starts_with("g6:")) return from_graph6(d.substr(3));
  if (d == "icosahedron" || d == "I") return Graph::icosahedron();
  if (d == "icosahedron-" || d == "I-") return Graph::icosahedron().without_edge(0);

  if (d.starts_with("blowup(") && d.back() == ')') {
    const std::string_view inner = d.substr(7, d.size() - 8);
    const auto comma = inner.rfind(',');
    require(comma != std::string_view::npos, ErrorKind::Parse,
            "blowup descriptor needs the form blowup(<graph>,<k>)");
    const Graph base = parse_graph_descriptor(inner.substr(0, comma));
    return edge_blowup(base, parse_size(inner.substr(comma + 1), d));
  }

  const char kind = d.front();
  const std::string_view rest = d.substr(1);
  switch (kind) {
    case 'P': return Graph::path(parse_size(rest, d));
    case 'C': return Graph::cycle(parse_size(rest, d));
    case 'M': return Graph::matching(parse_size(rest, d));
    case 'S': return Graph::star(parse_size(rest, d));
    case 'E': return Graph::empty(parse_size(rest, d));
    case 'K': {
      const auto comma = rest.find(',');
      if (comma == std::string_view::npos) return Graph::complete(parse_size(rest, d));
      return Graph::complete_bipartite(parse_size(rest.substr(0, comma), d),
                                       parse_size(rest.substr(comma + 1), d));
    }
    default: break;
  }
  fail(ErrorKind::Parse, "unrecognized graph descriptor '" + std::string(d) + "'");
}

}  // namespace planex
