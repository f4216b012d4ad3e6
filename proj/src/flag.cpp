#include "flagbound/flag.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace flagbound {

Flag::Flag(const Graph& g, const std::vector<int>& embedding) {
  int n = g.size();
  int k = static_cast<int>(embedding.size());
  if (k > n) throw InputError("embedding larger than graph");
  std::vector<bool> seen(n, false);
  for (int v : embedding) {
    if (v < 0 || v >= n) throw InputError("embedding vertex out of range");
    if (seen[v]) throw InputError("embedding vertex repeated");
    seen[v] = true;
  }
  std::vector<int> perm = embedding;
  for (int v = 0; v < n; ++v)
    if (!seen[v]) perm.push_back(v);
  graph_ = g.permuted(perm);
  k_ = k;
}

Flag Flag::prefix_labeled(const Graph& g, int k) {
  if (k < 0 || k > g.size()) throw InputError("bad label count");
  Flag f;
  f.graph_ = g;
  f.k_ = k;
  return f;
}

Graph Flag::type_graph() const {
  std::vector<int> verts(k_);
  for (int i = 0; i < k_; ++i) verts[i] = i;
  return induced_subgraph(graph_, verts);
}

std::vector<int> Flag::embedding() const {
  std::vector<int> e(k_);
  for (int i = 0; i < k_; ++i) e[i] = i;
  return e;
}

FlagForm flag_canonical_form(const Flag& f) {
  return FlagForm{f.size(), f.type_size(),
                  detail::minimal_bits_fixing_prefix(f.graph(), f.type_size())};
}

Flag canonical_flag(const FlagForm& form) {
  return Flag::prefix_labeled(Graph::from_upper_bits(form.n, form.bits), form.k);
}

std::vector<TypeSigma> enumerate_types(int k, const FamilySpec& h) {
  std::vector<TypeSigma> out;
  for (const Graph& g : enumerate_h_free(k, h)) out.push_back(TypeSigma{g});
  return out;
}

std::vector<Flag> enumerate_flags(const TypeSigma& sigma, int n, const FamilySpec& h) {
  int k = sigma.size();
  if (n < k) throw InputError("flag size smaller than type size");
  if (n > kMaxVertices)
    throw CapacityError("flag size " + std::to_string(n) + " exceeds limit of " +
                        std::to_string(kMaxVertices));
  if (!is_h_free(sigma.graph, h))
    throw InputError("type graph is not free of the forbidden family");

  struct Key {
    std::string family;
    int k;
    std::uint64_t lo, hi;
    int n;
    auto operator<=>(const Key&) const = default;
  };
  BitString sb = sigma.graph.upper_bits();
  Key key{h.key(), k, static_cast<std::uint64_t>(sb), static_cast<std::uint64_t>(sb >> 64), n};

  static std::mutex memo_mutex;
  static std::map<Key, std::vector<Flag>> memo;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  std::vector<Flag> out;
  if (n == k) {
    out.push_back(Flag::prefix_labeled(sigma.graph, k));
  } else {
    // Every flag on n vertices restricts, after deleting one unlabeled
    // vertex, to a flag on n-1 vertices; extending each canonical
    // representative by one vertex in every possible way therefore reaches
    // every class. h-freeness is hereditary, so filtering extensions by the
    // new vertex alone is sound.
    std::vector<Flag> prev = enumerate_flags(sigma, n - 1, h);
    std::set<std::pair<int, BitString>> seen;
    std::vector<std::pair<BitString, Flag>> found;
    for (const Flag& f : prev) {
      const Graph& g = f.graph();
      for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        Graph g2(n);
        for (int i = 0; i < n - 1; ++i)
          for (int j = i + 1; j < n - 1; ++j)
            if (g.edge(i, j)) g2.add_edge(i, j);
        for (int i = 0; i < n - 1; ++i)
          if ((mask >> i) & 1) g2.add_edge(i, n - 1);
        if (!is_h_free(g2, h)) continue;
        FlagForm form = flag_canonical_form(Flag::prefix_labeled(g2, k));
        if (seen.insert({k, form.bits}).second)
          found.emplace_back(form.bits, canonical_flag(form));
      }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [bits, f] : found) out.push_back(f);
  }

  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(key, out);
  return out;
}

bool check_nondegenerate(const TypeSigma& sigma, const FamilySpec& h, int horizon) {
  if (horizon < sigma.size()) throw InputError("horizon smaller than type size");
  if (horizon > kMaxVertices)
    throw CapacityError("horizon " + std::to_string(horizon) + " exceeds limit of " +
                        std::to_string(kMaxVertices));
  for (int n = sigma.size(); n <= horizon; ++n)
    if (enumerate_flags(sigma, n, h).empty()) return false;
  return true;
}

std::string format_flag(const Flag& f, GraphFormat fmt) {
  FlagForm form = flag_canonical_form(f);
  Flag rep = canonical_flag(form);
  std::string gs = fmt == GraphFormat::graph6 ? encode_graph6(rep.graph())
                                              : encode_edge_list(rep.graph());
  if (form.k == 0) return gs;
  std::string s = gs + " | embedding: ";
  for (int i = 0; i < form.k; ++i) {
    if (i > 0) s += ",";
    s += std::to_string(i);
  }
  return s;
}

Flag parse_flag(const std::string& text) {
  std::size_t bar = text.find('|');
  if (bar == std::string::npos) return Flag::prefix_labeled(parse_graph(text), 0);

  Graph g = parse_graph(text.substr(0, bar));
  std::string rest = text.substr(bar + 1);
  std::size_t kw = rest.find("embedding:");
  if (kw == std::string::npos)
    throw ParseError("expected 'embedding:' after '|'", bar + 1);
  std::string list = rest.substr(kw + 10);

  std::vector<int> emb;
  std::size_t p = 0;
  while (true) {
    while (p < list.size() && (list[p] == ' ' || list[p] == '\t')) ++p;
    if (p >= list.size()) break;
    std::size_t start = p;
    while (p < list.size() && std::isdigit(static_cast<unsigned char>(list[p]))) ++p;
    if (p == start)
      throw ParseError("expected vertex in embedding", bar + 1 + kw + 10 + start);
    emb.push_back(std::stoi(list.substr(start, p - start)));
    while (p < list.size() && (list[p] == ' ' || list[p] == '\t')) ++p;
    if (p < list.size()) {
      if (list[p] != ',')
        throw ParseError("expected ',' in embedding", bar + 1 + kw + 10 + p);
      ++p;
    }
  }
  if (emb.empty())
    throw ParseError("empty embedding list", bar + 1 + kw + 10);
  return Flag(g, emb);
}

}  // namespace flagbound
