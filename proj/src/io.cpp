#include "mdim/io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace mdim {

namespace {

std::size_t parse_id(const std::string& token, std::size_t line) {
  std::size_t value = 0;
  auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || p != token.data() + token.size())
    throw ParseError("line " + std::to_string(line) + ": expected a non-negative integer, got '" +
                     token + "'");
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream tokens(raw);
    std::vector<std::string> parts;
    for (std::string tok; tokens >> tok;) parts.push_back(tok);
    if (parts.empty()) continue;
    if (!n) {
      if (parts.size() != 2 || parts[0] != "n")
        throw ParseError("line " + std::to_string(line_no) + ": expected header 'n <count>', got '" +
                         parts[0] + "'");
      n = parse_id(parts[1], line_no);
      continue;
    }
    if (parts.size() != 2)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v', got " +
                       std::to_string(parts.size()) + " tokens starting at '" + parts[0] + "'");
    const std::size_t u = parse_id(parts[0], line_no), v = parse_id(parts[1], line_no);
    if (u >= *n || v >= *n)
      throw ParseError("line " + std::to_string(line_no) + ": vertex '" +
                       (u >= *n ? parts[0] : parts[1]) + "' out of range for n = " + std::to_string(*n));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!n) throw ParseError("missing header 'n <count>'");
  return build_graph(*n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace mdim
