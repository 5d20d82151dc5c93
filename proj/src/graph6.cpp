#include <algorithm>
#include <string>

#include <json.hpp>

#include "glik/errors.hpp"
#include "glik/graph.hpp"

namespace glik {

// graph6 short form: byte n+63, then the upper triangle read column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, most
// significant bit first, each byte offset by 63, last byte zero-padded.

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) pos = header.size();
  std::size_t end = text.size();
  while (end > pos && (text[end - 1] == '\n' || text[end - 1] == '\r' ||
                       text[end - 1] == ' ' || text[end - 1] == '\t')) {
    --end;
  }
  if (pos >= end) throw MalformedInput("empty graph6 string", pos);

  const auto byte_at = [&](std::size_t i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw MalformedInput("byte outside graph6 range 63..126", i);
    return c - 63;
  };
  const int n = byte_at(pos);
  if (n == 63) throw MalformedInput("long-form graph6 (order > 62) is not supported", pos);
  if (n == 0) throw MalformedInput("graph6 order must be at least 1", pos);
  ++pos;

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (bits + 5) / 6;
  if (end - pos < nbytes) throw MalformedInput("graph6 string truncated", end);
  if (end - pos > nbytes) throw MalformedInput("trailing bytes after graph6 data", pos + nbytes);

  std::vector<VertexMask> rows(n, 0);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int chunk = byte_at(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) {
        rows[u] |= VertexMask{1} << v;
        rows[v] |= VertexMask{1} << u;
      }
    }
  }
  if (k % 6 != 0) {
    const int chunk = byte_at(pos + k / 6);
    if (chunk & ((1 << (6 - k % 6)) - 1)) {
      throw MalformedInput("nonzero padding bits in graph6", pos + k / 6);
    }
  }
  return Graph::from_rows(std::move(rows));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw LimitExceeded("graph6 short form", kMaxGraph6Order, n);
  }
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_edge_list_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("order") || !doc["order"].is_number_integer()) {
    throw MalformedInput("edge list needs an integer \"order\"", 0);
  }
  const int order = doc["order"].get<int>();
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw MalformedInput("\"edges\" must be an array", 0);
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw MalformedInput("each edge must be a pair of integers", 0);
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  std::vector<Edge> seen = edges;
  for (auto& [u, v] : seen) {
    if (u > v) std::swap(u, v);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw MalformedInput("duplicate edge in edge list", 0);
  }
  try {
    return Graph(order, edges);
  } catch (const InvalidParameter& e) {
    throw MalformedInput(e.what(), 0);
  }
}

std::string to_edge_list_json(const Graph& g) {
  nlohmann::json doc;
  doc["order"] = g.order();
  doc["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) doc["edges"].push_back({u, v});
  return doc.dump();
}

} // namespace glik
