#pragma once

// Hypergraphs and the Boolean sign function g(i) of their hypergraph states.
//
// Bit convention: vertex v is bit (n - 1 - v) of a basis index, so vertex 0 is
// the leftmost symbol of the ket label |b_0 b_1 ... b_{n-1}>.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hgnoise {

class HypergraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parse failure; line() is 1-based and refers to the input text.
class ParseError : public HypergraphError {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

using Edge = std::vector<unsigned>;

class Hypergraph {
 public:
  static constexpr unsigned kMaxVertices = 12;

  /// Validates and canonicalizes: each edge sorted, edges sorted. Throws
  /// HypergraphError on an empty edge, a repeated vertex, an out-of-range
  /// vertex, a duplicate edge or a vertex count outside [1, kMaxVertices].
  Hypergraph(unsigned vertex_count, std::vector<Edge> edges);

  unsigned vertex_count() const { return n_; }
  /// N = 2^n
  std::size_t dimension() const { return std::size_t{1} << n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Basis-index bit mask of each edge, in edges() order.
  const std::vector<std::uint32_t>& edge_masks() const { return masks_; }

  /// Bit of a basis index that carries vertex v.
  std::uint32_t vertex_bit(unsigned v) const { return std::uint32_t{1} << (n_ - 1 - v); }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  unsigned n_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> masks_;
};

/// Text format: first significant line is n, every further non-empty line one
/// hyperedge of whitespace-separated decimal vertex indices. Lines whose first
/// non-blank character is '#' are comments.
Hypergraph parse_hypergraph(std::string_view text);

/// Inverse of parse_hypergraph for canonical hypergraphs.
std::string format_hypergraph(const Hypergraph& h);

/// g(i) = (sum over edges of prod over v in e of bit_v(i)) mod 2.
/// Throws std::out_of_range if i >= 2^n.
int boolean_g(const Hypergraph& h, std::size_t i);

/// Entry i is (-1)^g(i).
std::vector<int> sign_vector(const Hypergraph& h);

}  // namespace hgnoise
