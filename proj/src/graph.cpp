#include "flagbound/graph.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

namespace flagbound {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw InputError("negative vertex count");
  if (n > kMaxVertices)
    throw CapacityError("graph on " + std::to_string(n) + " vertices exceeds limit of " +
                        std::to_string(kMaxVertices));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [i, j] : edges) g.add_edge(i, j);
  return g;
}

Graph Graph::from_upper_bits(int n, BitString bits) {
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bits & pair_bit(pair_count(j) + i)) g.add_edge(i, j);
  return g;
}

bool Graph::edge(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_)
    throw InputError("vertex out of range");
  return (rows_[i] >> j) & 1;
}

void Graph::add_edge(int i, int j) {
  if (i < 0 || i >= n_ || j < 0 || j >= n_)
    throw InputError("vertex out of range");
  if (i == j) throw InputError("self-loop not allowed");
  rows_[i] |= static_cast<std::uint16_t>(1u << j);
  rows_[j] |= static_cast<std::uint16_t>(1u << i);
}

int Graph::degree(int v) const {
  if (v < 0 || v >= n_) throw InputError("vertex out of range");
  return __builtin_popcount(rows_[v]);
}

int Graph::edge_total() const {
  int s = 0;
  for (int v = 0; v < n_; ++v) s += __builtin_popcount(rows_[v]);
  return s / 2;
}

BitString Graph::upper_bits() const {
  BitString bits = 0;
  for (int j = 1; j < n_; ++j)
    for (int i = 0; i < j; ++i)
      if ((rows_[i] >> j) & 1) bits |= pair_bit(pair_count(j) + i);
  return bits;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw InputError("permutation size mismatch");
  std::vector<bool> seen(n_, false);
  for (int v : perm) {
    if (v < 0 || v >= n_ || seen[v]) throw InputError("not a permutation");
    seen[v] = true;
  }
  Graph g(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (edge(perm[i], perm[j])) g.add_edge(i, j);
  return g;
}

namespace detail {

namespace {

struct CacheKey {
  std::uint64_t lo, hi;
  int n, fixed;
  bool operator==(const CacheKey&) const = default;
};

struct CacheKeyHash {
  std::size_t operator()(const CacheKey& k) const {
    std::uint64_t h = k.lo * 0x9e3779b97f4a7c15ULL;
    h ^= k.hi + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= (static_cast<std::uint64_t>(k.n) << 8 | static_cast<std::uint64_t>(k.fixed)) * 0xff51afd7ed558ccdULL;
    return static_cast<std::size_t>(h);
  }
};

// Branch and bound over vertex orderings. Positions are filled left to
// right; at each position candidates are tried in ascending order of the
// column bits they would contribute, so the first completed leaf is the
// greedy incumbent and any candidate whose prefix already exceeds the best
// known prefix can cut off the rest of its siblings.
struct MinSearch {
  const Graph& g;
  int n;
  std::array<int, kMaxVertices> pos{};
  unsigned used = 0;
  BitString best = ~static_cast<BitString>(0);

  void run(int j, BitString acc) {
    if (j == n) {
      if (acc < best) best = acc;
      return;
    }
    int base = pair_count(j);
    std::array<std::pair<BitString, int>, kMaxVertices> cand;
    int c = 0;
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1) continue;
      BitString col = 0;
      for (int i = 0; i < j; ++i)
        if (g.edge(pos[i], v)) col |= pair_bit(base + i);
      cand[c++] = {col, v};
    }
    std::sort(cand.begin(), cand.begin() + c);
    BitString mask = prefix_mask(pair_count(j + 1));
    for (int t = 0; t < c; ++t) {
      BitString acc2 = acc | cand[t].first;
      if (acc2 > (best & mask)) break;
      pos[j] = cand[t].second;
      used |= 1u << cand[t].second;
      run(j + 1, acc2);
      used &= ~(1u << cand[t].second);
    }
  }
};

std::mutex cache_mutex;
std::unordered_map<CacheKey, BitString, CacheKeyHash> bits_cache;

}  // namespace

BitString minimal_bits_fixing_prefix(const Graph& g, int fixed) {
  int n = g.size();
  if (fixed < 0 || fixed > n) throw InputError("bad fixed prefix length");
  if (n <= 1) return 0;

  BitString raw = g.upper_bits();
  CacheKey key{static_cast<std::uint64_t>(raw), static_cast<std::uint64_t>(raw >> 64), n, fixed};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = bits_cache.find(key);
    if (it != bits_cache.end()) return it->second;
  }

  MinSearch s{g, n};
  BitString acc0 = 0;
  for (int j = 1; j < fixed; ++j)
    for (int i = 0; i < j; ++i)
      if (g.edge(i, j)) acc0 |= pair_bit(pair_count(j) + i);
  for (int i = 0; i < fixed; ++i) s.pos[i] = i;
  s.used = fixed == 0 ? 0u : (1u << fixed) - 1;
  s.run(fixed, acc0);

  std::lock_guard<std::mutex> lock(cache_mutex);
  bits_cache.emplace(key, s.best);
  return s.best;
}

void for_each_subset(const std::vector<int>& pool, int k,
                     const std::function<void(const std::vector<int>&)>& fn) {
  int m = static_cast<int>(pool.size());
  if (k < 0 || k > m) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> out(k);
  while (true) {
    for (int i = 0; i < k; ++i) out[i] = pool[idx[i]];
    fn(out);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

CanonicalForm canonical_form(const Graph& g) {
  return CanonicalForm{g.size(), detail::minimal_bits_fixing_prefix(g, 0)};
}

Graph canonical_graph(const Graph& g) {
  return Graph::from_upper_bits(g.size(), canonical_form(g).bits);
}

FamilySpec::FamilySpec(const std::vector<Graph>& members) {
  std::set<std::pair<int, BitString>> seen;
  std::vector<std::pair<CanonicalForm, Graph>> canon;
  for (const Graph& m : members) {
    if (m.size() == 0) throw InputError("forbidden graph must have at least one vertex");
    CanonicalForm cf = canonical_form(m);
    if (seen.insert({cf.n, cf.bits}).second)
      canon.emplace_back(cf, Graph::from_upper_bits(cf.n, cf.bits));
  }
  std::sort(canon.begin(), canon.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [cf, g] : canon) {
    forms_.push_back(cf);
    members_.push_back(g);
    if (!key_.empty()) key_ += ',';
    key_ += encode_graph6(g);
  }
}

int FamilySpec::max_member_size() const {
  int m = 0;
  for (const Graph& g : members_) m = std::max(m, g.size());
  return m;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  int k = static_cast<int>(vertices.size());
  std::vector<bool> seen(g.size(), false);
  for (int v : vertices) {
    if (v < 0 || v >= g.size()) throw InputError("induced subgraph vertex out of range");
    if (seen[v]) throw InputError("induced subgraph vertex repeated");
    seen[v] = true;
  }
  Graph out(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.edge(vertices[i], vertices[j])) out.add_edge(i, j);
  return out;
}

namespace {

// Does g contain an induced copy of the family member with canonical form
// mf? When require_vertex >= 0 only subsets through that vertex are checked
// (enough when every smaller subset was already known clean).
bool contains_member(const Graph& g, const CanonicalForm& mf, int require_vertex) {
  int n = g.size(), k = mf.n;
  if (k > n) return false;
  bool found = false;
  std::vector<int> pool;
  for (int v = 0; v < n; ++v)
    if (v != require_vertex) pool.push_back(v);
  int choose = require_vertex >= 0 ? k - 1 : k;
  if (choose < 0) return false;
  detail::for_each_subset(pool, choose, [&](const std::vector<int>& subset) {
    if (found) return;
    std::vector<int> verts = subset;
    if (require_vertex >= 0) verts.push_back(require_vertex);
    Graph sub = induced_subgraph(g, verts);
    if (canonical_form(sub) == mf) found = true;
  });
  return found;
}

bool stays_h_free_adding_last(const Graph& g, const FamilySpec& h) {
  for (const CanonicalForm& mf : h.member_forms())
    if (contains_member(g, mf, g.size() - 1)) return false;
  return true;
}

}  // namespace

bool is_h_free(const Graph& g, const FamilySpec& h) {
  for (const CanonicalForm& mf : h.member_forms())
    if (contains_member(g, mf, -1)) return false;
  return true;
}

std::vector<Graph> enumerate_h_free(int n, const FamilySpec& h) {
  if (n < 0) throw InputError("negative vertex count");
  if (n > kMaxVertices)
    throw CapacityError("enumeration size " + std::to_string(n) + " exceeds limit of " +
                        std::to_string(kMaxVertices));

  static std::mutex memo_mutex;
  static std::map<std::pair<std::string, int>, std::vector<Graph>> memo;
  std::pair<std::string, int> key{h.key(), n};
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  std::vector<Graph> out;
  if (n == 0) {
    out.push_back(Graph(0));
  } else {
    std::vector<Graph> prev = enumerate_h_free(n - 1, h);
    std::set<std::pair<int, BitString>> seen;
    std::vector<std::pair<BitString, Graph>> found;
    for (const Graph& g : prev) {
      for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        Graph g2(n);
        for (int i = 0; i < n - 1; ++i)
          for (int j = i + 1; j < n - 1; ++j)
            if (g.edge(i, j)) g2.add_edge(i, j);
        for (int i = 0; i < n - 1; ++i)
          if ((mask >> i) & 1) g2.add_edge(i, n - 1);
        if (!stays_h_free_adding_last(g2, h)) continue;
        CanonicalForm cf = canonical_form(g2);
        if (seen.insert({cf.n, cf.bits}).second)
          found.emplace_back(cf.bits, Graph::from_upper_bits(n, cf.bits));
      }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [bits, g] : found) out.push_back(g);
  }

  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(key, out);
  return out;
}

std::string encode_graph6(const Graph& g) {
  int n = g.size();
  std::string s(1, static_cast<char>(63 + n));
  int m = pair_count(n);
  BitString bits = g.upper_bits();
  int acc = 0, nb = 0;
  for (int p = 0; p < m; ++p) {
    int bit = (bits & pair_bit(p)) ? 1 : 0;
    acc = acc << 1 | bit;
    if (++nb == 6) {
      s += static_cast<char>(acc + 63);
      acc = 0;
      nb = 0;
    }
  }
  if (nb > 0) s += static_cast<char>((acc << (6 - nb)) + 63);
  return s;
}

Graph parse_graph6(const std::string& text) {
  if (text.empty()) throw ParseError("empty graph6 string", 0);
  int n = static_cast<unsigned char>(text[0]) - 63;
  if (n < 0 || n > 62)
    throw ParseError("bad graph6 size character", 0);
  if (n > kMaxVertices)
    throw CapacityError("graph6 string describes " + std::to_string(n) +
                        " vertices, limit is " + std::to_string(kMaxVertices));
  int m = pair_count(n);
  std::size_t need = 1 + (m + 5) / 6;
  if (text.size() != need)
    throw ParseError("graph6 string has wrong length", text.size());
  Graph g(n);
  int p = 0;
  for (std::size_t c = 1; c < text.size(); ++c) {
    int v = static_cast<unsigned char>(text[c]) - 63;
    if (v < 0 || v > 63) throw ParseError("bad graph6 data character", c);
    for (int b = 5; b >= 0; --b) {
      if (p >= m) {
        if ((v >> b) & 1) throw ParseError("graph6 padding bits not zero", c);
        continue;
      }
      if ((v >> b) & 1) {
        // Invert pair index p back to its (i, j).
        int j = 1;
        while (pair_count(j + 1) <= p) ++j;
        int i = p - pair_count(j);
        g.add_edge(i, j);
      }
      ++p;
    }
  }
  return g;
}

std::string encode_edge_list(const Graph& g) {
  std::string s = std::to_string(g.size()) + ";";
  bool first = true;
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (g.edge(i, j)) {
        s += first ? " " : ", ";
        s += std::to_string(i) + "-" + std::to_string(j);
        first = false;
      }
  return s;
}

namespace {

// Tiny scanner for "n; i-j, i-j, ...".
struct EdgeListScanner {
  const std::string& s;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool at_end() {
    skip_space();
    return pos >= s.size();
  }
  int read_int(const char* what) {
    skip_space();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start)
      throw ParseError(std::string("expected ") + what, start);
    if (pos - start > 4)
      throw ParseError(std::string(what) + " out of range", start);
    return std::stoi(s.substr(start, pos - start));
  }
  bool consume(char c) {
    skip_space();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

}  // namespace

Graph parse_graph(const std::string& text) {
  std::size_t start = text.find_first_not_of(" \t");
  if (start == std::string::npos) throw ParseError("empty graph string", 0);

  if (!std::isdigit(static_cast<unsigned char>(text[start])))
    return parse_graph6(text.substr(start, text.find_last_not_of(" \t") - start + 1));

  EdgeListScanner sc{text, start};
  int n = sc.read_int("vertex count");
  if (n > kMaxVertices)
    throw CapacityError("edge list describes " + std::to_string(n) +
                        " vertices, limit is " + std::to_string(kMaxVertices));
  Graph g(n);
  if (sc.at_end()) return g;
  if (!sc.consume(';'))
    throw ParseError("expected ';' after vertex count", sc.pos);
  if (sc.at_end()) return g;

  while (true) {
    std::size_t edge_start = sc.pos;
    int i = sc.read_int("vertex");
    if (!sc.consume('-'))
      throw ParseError("expected '-' in edge", sc.pos);
    int j = sc.read_int("vertex");
    if (i >= n || j >= n)
      throw ParseError("edge vertex out of range", edge_start);
    if (i == j)
      throw ParseError("edge endpoints must differ", edge_start);
    if (g.edge(i, j))
      throw ParseError("duplicate edge", edge_start);
    g.add_edge(i, j);
    if (sc.at_end()) break;
    if (!sc.consume(','))
      throw ParseError("expected ',' between edges", sc.pos);
    if (sc.at_end())
      throw ParseError("trailing comma", sc.pos);
  }
  return g;
}

std::string format_graph(const Graph& g, GraphFormat fmt) {
  Graph c = canonical_graph(g);
  return fmt == GraphFormat::graph6 ? encode_graph6(c) : encode_edge_list(c);
}

std::optional<Graph> named_graph(const std::string& name) {
  auto complete = [](int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
  };
  if (name == "K1") return complete(1);
  if (name == "K2" || name == "edge") return complete(2);
  if (name == "K3" || name == "triangle") return complete(3);
  if (name == "K4") return complete(4);
  if (name == "P3") return Graph::from_edges(3, {{0, 1}, {1, 2}});
  if (name == "C5")
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  if (name == "E3") return Graph(3);
  return std::nullopt;
}

}  // namespace flagbound
