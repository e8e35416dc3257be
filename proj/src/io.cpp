#include "graphreal/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>

#include <json.hpp>

namespace graphreal::io {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

bool blank(std::string_view line) {
  for (char c : line) {
    if (!is_space(c)) return false;
  }
  return true;
}

long long parse_integer(std::string_view token) {
  long long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && is_space(line[k])) ++k;
    const auto start = k;
    while (k < line.size() && !is_space(line[k])) ++k;
    if (k > start) tokens.push_back(line.substr(start, k - start));
  }
  return tokens;
}

}  // namespace

std::vector<long long> parse_sequence_line(std::string_view line) {
  std::vector<long long> out;
  for (auto token : split(line)) out.push_back(parse_integer(token));
  if (out.empty()) throw Error(ErrorKind::ParseError, "empty degree sequence");
  return out;
}

std::vector<std::vector<long long>> read_sequences(std::istream& in) {
  std::vector<std::vector<long long>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!blank(line)) out.push_back(parse_sequence_line(line));
  }
  return out;
}

void write_graph_text(std::ostream& out, const LabeledGraph& g) {
  out << "graph n=" << g.node_count() << " m=" << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  out << '\n';
}

std::string graph_to_json_line(const LabeledGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  nlohmann::json j;
  j["n"] = g.node_count();
  j["edges"] = std::move(edges);
  return j.dump();
}

std::vector<LabeledGraph> read_graphs(std::istream& in) {
  std::vector<LabeledGraph> out;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + why);
  };
  auto field = [&](std::string_view token, std::string_view key) {
    if (token.substr(0, key.size()) != key) fail("expected '" + std::string(key) + "'");
    const auto value = parse_integer(token.substr(key.size()));
    if (value < 0) fail("negative count");
    return static_cast<std::size_t>(value);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    const auto header = split(line);
    if (header.size() != 3 || header[0] != "graph") fail("expected 'graph n=<n> m=<m>'");
    const auto n = field(header[1], "n=");
    const auto m = field(header[2], "m=");

    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
      if (!std::getline(in, line)) fail("missing edge line");
      ++line_no;
      const auto tokens = split(line);
      if (tokens.size() != 2) fail("expected 'u v'");
      const auto u = parse_integer(tokens[0]);
      const auto v = parse_integer(tokens[1]);
      if (u >= v) fail("edge endpoints must satisfy u < v");
      edges.emplace_back(static_cast<NodeLabel>(u), static_cast<NodeLabel>(v));
    }
    try {
      out.emplace_back(n, std::move(edges));
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  return out;
}

LabeledGraph to_input_labels(const LabeledGraph& g, const ValidatedSequence& v) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& [a, b] : g.edges()) {
    edges.emplace_back(v.original_label[static_cast<std::size_t>(a - 1)],
                       v.original_label[static_cast<std::size_t>(b - 1)]);
  }
  return LabeledGraph(v.input_size, std::move(edges));
}

}  // namespace graphreal::io
