#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagbound/errors.hpp"

namespace flagbound {

// Graphs are simple and undirected with at most kMaxVertices vertices, so the
// upper triangle of the adjacency matrix fits in 128 bits. Pairs are taken in
// column-major order (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),... and pair p lands
// at bit (127 - p); plain integer comparison of the packed value is then the
// lexicographic comparison of the adjacency bit string.
using BitString = unsigned __int128;

inline constexpr int kMaxVertices = 12;

constexpr int pair_count(int n) { return n * (n - 1) / 2; }
constexpr BitString pair_bit(int p) { return static_cast<BitString>(1) << (127 - p); }

// 1-bits in the first m pair positions.
constexpr BitString prefix_mask(int m) {
  return m == 0 ? static_cast<BitString>(0) : ~static_cast<BitString>(0) << (128 - m);
}

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static Graph from_upper_bits(int n, BitString bits);

  int size() const { return n_; }
  bool edge(int i, int j) const;
  void add_edge(int i, int j);
  int degree(int v) const;
  int edge_total() const;

  // Adjacency upper triangle under the current labeling (not canonicalized).
  BitString upper_bits() const;

  // Graph whose vertex i plays the role of vertex perm[i] here, i.e.
  // result.edge(i, j) == edge(perm[i], perm[j]).
  Graph permuted(const std::vector<int>& perm) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  // Row bitsets; bit j of rows_[i] is the edge {i, j}.
  std::uint16_t rows_[kMaxVertices] = {};
};

// Isomorphism-class key: the lexicographically least adjacency bit string
// over all relabelings. Total order: by size, then by bit string.
struct CanonicalForm {
  int n = 0;
  BitString bits = 0;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.n == b.n && a.bits == b.bits;
  }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    return a.n != b.n ? a.n < b.n : a.bits < b.bits;
  }
};

CanonicalForm canonical_form(const Graph& g);

// A representative relabeled so that upper_bits() equals the canonical bits.
Graph canonical_graph(const Graph& g);

// Finite set of forbidden graphs, stored one canonical representative per
// isomorphism class, sorted. Members must be nonempty graphs.
class FamilySpec {
 public:
  FamilySpec() = default;
  explicit FamilySpec(const std::vector<Graph>& members);

  const std::vector<Graph>& members() const { return members_; }
  const std::vector<CanonicalForm>& member_forms() const { return forms_; }
  int max_member_size() const;

  // Stable identity string (comma-joined graph6 of the members).
  const std::string& key() const { return key_; }

  bool operator==(const FamilySpec& o) const { return key_ == o.key_; }

 private:
  std::vector<Graph> members_;
  std::vector<CanonicalForm> forms_;
  std::string key_;
};

// Subgraph induced on the given vertices, relabeled 0..|vertices|-1 in the
// order given. Vertices must be distinct and in range.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// True when no induced subgraph of g is isomorphic to a member of h.
bool is_h_free(const Graph& g, const FamilySpec& h);

// All h-free graphs on n vertices, one canonical representative per
// isomorphism class, sorted by canonical form.
std::vector<Graph> enumerate_h_free(int n, const FamilySpec& h);

enum class GraphFormat { edges, graph6 };

// Accepts either format: a leading digit means the edge-list form
// "n; i-j, i-j, ...", anything else is parsed as graph6.
Graph parse_graph(const std::string& text);

// Serialize the canonical representative of g.
std::string format_graph(const Graph& g, GraphFormat fmt = GraphFormat::edges);

// Encodings of the labeling as given (no canonicalization).
std::string encode_graph6(const Graph& g);
std::string encode_edge_list(const Graph& g);
Graph parse_graph6(const std::string& text);

// Small built-in graphs addressable by name in the CLI: K1..K4, P3, C5, E3
// (three isolated vertices), plus aliases "edge" and "triangle".
std::optional<Graph> named_graph(const std::string& name);

namespace detail {

// Least packed adjacency string over relabelings that fix vertices
// 0..fixed-1 pointwise. fixed == 0 gives the plain canonical form. Results
// are cached per (graph, fixed) behind a mutex.
BitString minimal_bits_fixing_prefix(const Graph& g, int fixed);

// Calls fn with each size-k subset of pool (elements kept in pool order).
void for_each_subset(const std::vector<int>& pool, int k,
                     const std::function<void(const std::vector<int>&)>& fn);

}  // namespace detail

}  // namespace flagbound
