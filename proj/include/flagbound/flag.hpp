#pragma once

#include <string>
#include <vector>

#include "flagbound/graph.hpp"

namespace flagbound {

// A type of size k: a graph whose vertices 0..k-1 all carry labels.
struct TypeSigma {
  Graph graph;

  int size() const { return graph.size(); }
  bool operator==(const TypeSigma&) const = default;
};

// Isomorphism-class key for flags: size, number of labels, and the least
// adjacency bit string over relabelings that fix the labeled prefix.
struct FlagForm {
  int n = 0;
  int k = 0;
  BitString bits = 0;

  friend bool operator==(const FlagForm& a, const FlagForm& b) {
    return a.n == b.n && a.k == b.k && a.bits == b.bits;
  }
  friend bool operator<(const FlagForm& a, const FlagForm& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.k != b.k) return a.k < b.k;
    return a.bits < b.bits;
  }
};

// A graph with an injective labeling of a type into it. Construction
// immediately relabels so the labeled vertices sit at 0..k-1 in label
// order; the embedding is the identity on the prefix from then on.
class Flag {
 public:
  Flag() = default;

  // embedding[i] = vertex of g carrying label i. Entries must be distinct
  // and in range. An empty embedding makes an unlabeled flag.
  Flag(const Graph& g, const std::vector<int>& embedding);

  // g's first k vertices are already the labels in order. A named factory:
  // an int overload of the constructor would collide with one-element
  // braced embeddings.
  static Flag prefix_labeled(const Graph& g, int k);

  const Graph& graph() const { return graph_; }
  int size() const { return graph_.size(); }
  int type_size() const { return k_; }
  Graph type_graph() const;

  // Always 0..k-1 after normalization.
  std::vector<int> embedding() const;

  bool operator==(const Flag&) const = default;

 private:
  Graph graph_;
  int k_ = 0;
};

FlagForm flag_canonical_form(const Flag& f);

// A representative whose adjacency bits equal the canonical form's.
Flag canonical_flag(const FlagForm& form);

// All types of size k with an h-free underlying graph, one per isomorphism
// class, sorted. The representative graph is the canonical one.
std::vector<TypeSigma> enumerate_types(int k, const FamilySpec& h);

// All sigma-flags on n vertices with h-free underlying graph, one canonical
// representative per flag-isomorphism class, sorted by FlagForm. Requires
// sigma itself h-free and k <= n <= kMaxVertices.
std::vector<Flag> enumerate_flags(const TypeSigma& sigma, int n, const FamilySpec& h);

// True when F_n^sigma is nonempty for every n from |sigma| to horizon.
bool check_nondegenerate(const TypeSigma& sigma, const FamilySpec& h, int horizon);

// "graph | embedding: 0,1,...,k-1" on the canonical representative; a bare
// graph string when k == 0.
std::string format_flag(const Flag& f, GraphFormat fmt = GraphFormat::edges);
Flag parse_flag(const std::string& text);

}  // namespace flagbound
