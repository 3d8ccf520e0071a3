#include "hgnoise/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hgnoise {

ParseError::ParseError(std::size_t line, const std::string& what)
    : HypergraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string edge_string(const Edge& e) {
  std::string out = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e[i]);
  }
  return out + "}";
}

// Why a sorted edge is invalid; empty when it is fine.
std::string edge_problem(const Edge& sorted, unsigned n) {
  if (sorted.empty()) return "empty hyperedge";
  if (sorted.back() >= n) {
    return "vertex index " + std::to_string(sorted.back()) + " out of range for n = " + std::to_string(n);
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return "repeated vertex in hyperedge " + edge_string(sorted);
  }
  return {};
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<unsigned> parse_indices(std::string_view line, std::size_t line_no) {
  std::vector<unsigned> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    const std::string_view token = line.substr(pos, end - pos);
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError(line_no, "malformed token '" + std::string(token) + "'");
    }
    out.push_back(value);
    pos = end;
  }
  return out;
}

}  // namespace

Hypergraph::Hypergraph(unsigned vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
  if (n_ == 0 || n_ > kMaxVertices) {
    throw HypergraphError("vertex count " + std::to_string(n_) + " outside [1, " +
                          std::to_string(kMaxVertices) + "]");
  }
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    if (auto problem = edge_problem(e, n_); !problem.empty()) throw HypergraphError(problem);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw HypergraphError("duplicate hyperedge " + edge_string(*dup));
  }
  edges_ = std::move(edges);
  masks_.reserve(edges_.size());
  for (const auto& e : edges_) {
    std::uint32_t mask = 0;
    for (unsigned v : e) mask |= vertex_bit(v);
    masks_.push_back(mask);
  }
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::size_t line_no = 0;
  bool have_n = false;
  unsigned n = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;

  std::size_t start = 0;
  while (start <= text.size()) {
    auto stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    const std::string_view line = trim(text.substr(start, stop - start));
    ++line_no;
    start = stop + 1;

    if (line.empty() || line.front() == '#') {
      if (stop == text.size()) break;
      continue;
    }
    auto values = parse_indices(line, line_no);
    if (!have_n) {
      if (values.size() != 1) throw ParseError(line_no, "expected a single vertex count");
      n = values.front();
      if (n == 0 || n > Hypergraph::kMaxVertices) {
        throw ParseError(line_no, "vertex count " + std::to_string(n) + " outside [1, " +
                                      std::to_string(Hypergraph::kMaxVertices) + "]");
      }
      have_n = true;
    } else {
      std::sort(values.begin(), values.end());
      if (auto problem = edge_problem(values, n); !problem.empty()) throw ParseError(line_no, problem);
      for (std::size_t k = 0; k < edges.size(); ++k) {
        if (edges[k] == values) {
          throw ParseError(line_no, "duplicate hyperedge " + edge_string(values) + " (first on line " +
                                        std::to_string(edge_lines[k]) + ")");
        }
      }
      edges.push_back(std::move(values));
      edge_lines.push_back(line_no);
    }
    if (stop == text.size()) break;
  }
  if (!have_n) throw ParseError(line_no == 0 ? 1 : line_no, "missing vertex count");
  return Hypergraph(n, std::move(edges));
}

std::string format_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << h.vertex_count() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

int boolean_g(const Hypergraph& h, std::size_t i) {
  if (i >= h.dimension()) {
    throw std::out_of_range("basis index " + std::to_string(i) + " >= " + std::to_string(h.dimension()));
  }
  const auto bits = static_cast<std::uint32_t>(i);
  unsigned parity = 0;
  for (std::uint32_t mask : h.edge_masks()) parity ^= (bits & mask) == mask ? 1u : 0u;
  return static_cast<int>(parity);
}

std::vector<int> sign_vector(const Hypergraph& h) {
  std::vector<int> signs(h.dimension());
  for (std::size_t i = 0; i < signs.size(); ++i) signs[i] = boolean_g(h, i) ? -1 : 1;
  return signs;
}

}  // namespace hgnoise
