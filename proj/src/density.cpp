#include "flagbound/density.hpp"

#include <algorithm>
#include <functional>
#include <iterator>

namespace flagbound {

namespace {

void require_same_type(const Flag& f, const Flag& g) {
  if (f.type_size() != g.type_size() || f.type_graph() != g.type_graph())
    throw InputError("flags have different types");
}

// Form of the sub-flag of g induced on its labels plus the given unlabeled
// vertices (ascending).
FlagForm induced_flag_form(const Flag& g, const std::vector<int>& unlabeled) {
  std::vector<int> verts(g.type_size());
  for (int i = 0; i < g.type_size(); ++i) verts[i] = i;
  verts.insert(verts.end(), unlabeled.begin(), unlabeled.end());
  Graph sub = induced_subgraph(g.graph(), verts);
  return flag_canonical_form(Flag::prefix_labeled(sub, g.type_size()));
}

}  // namespace

Rational density(const Flag& f, const Flag& g) {
  require_same_type(f, g);
  int k = f.type_size();
  int pick = f.size() - k;
  int m = g.size() - k;
  if (pick > m) throw InputError("flag does not fit in host");

  FlagForm target = flag_canonical_form(f);
  std::vector<int> pool(m);
  for (int i = 0; i < m; ++i) pool[i] = k + i;

  mpz_class count = 0;
  detail::for_each_subset(pool, pick, [&](const std::vector<int>& subset) {
    if (induced_flag_form(g, subset) == target) ++count;
  });
  Rational r(count, binomial(m, pick));
  r.canonicalize();
  return r;
}

Rational multi_density(const std::vector<Flag>& fs, const Flag& g) {
  if (fs.empty()) throw InputError("empty flag list");
  int k = g.type_size();
  int total_pick = 0;
  for (const Flag& f : fs) {
    require_same_type(f, g);
    total_pick += f.size() - k;
  }
  int m = g.size() - k;
  if (total_pick > m) throw InputError("flags do not fit in host disjointly");

  std::vector<FlagForm> targets;
  std::vector<int> picks;
  for (const Flag& f : fs) {
    targets.push_back(flag_canonical_form(f));
    picks.push_back(f.size() - k);
  }

  std::vector<int> pool(m);
  for (int i = 0; i < m; ++i) pool[i] = k + i;

  // Count tuples of disjoint sets where every level matches; a mismatch at
  // level i prunes everything below it.
  mpz_class favorable = 0;
  std::function<void(std::size_t, const std::vector<int>&)> walk =
      [&](std::size_t level, const std::vector<int>& avail) {
        if (level == fs.size()) {
          ++favorable;
          return;
        }
        detail::for_each_subset(avail, picks[level], [&](const std::vector<int>& subset) {
          if (induced_flag_form(g, subset) != targets[level]) return;
          std::vector<int> rest;
          std::set_difference(avail.begin(), avail.end(), subset.begin(), subset.end(),
                              std::back_inserter(rest));
          walk(level + 1, rest);
        });
      };
  walk(0, pool);

  mpz_class total = 1;
  int left = m;
  for (int p : picks) {
    total *= binomial(left, p);
    left -= p;
  }
  Rational r(favorable, total);
  r.canonicalize();
  return r;
}

std::map<FlagForm, Rational> expand_density(const Flag& f, int n, const FamilySpec& h) {
  if (n < f.size()) throw InputError("expansion size smaller than flag");
  TypeSigma sigma{f.type_graph()};
  std::map<FlagForm, Rational> out;
  for (const Flag& big : enumerate_flags(sigma, n, h)) {
    Rational d = density(f, big);
    if (d != 0) out.emplace(flag_canonical_form(big), d);
  }
  return out;
}

bool check_chain_rule(const std::vector<Flag>& fs, const Flag& g, int s, int n,
                      const FamilySpec& h) {
  if (fs.empty()) throw InputError("empty flag list");
  if (s < 1 || s > static_cast<int>(fs.size()))
    throw InputError("split point out of range");
  int k = g.type_size();
  int head = 0, tail = 0;
  for (int i = 0; i < static_cast<int>(fs.size()); ++i) {
    require_same_type(fs[i], g);
    (i < s ? head : tail) += fs[i].size() - k;
  }
  if (n < k) throw InputError("intermediate size smaller than type");
  if (n - k < head)
    throw InputError("intermediate size too small for the first group");
  if (g.size() - k < (n - k) + tail)
    throw InputError("host too small for intermediate flag plus the rest");
  // The middle sum ranges over flags with h-free graphs, which only covers
  // every sub-flag of g when g itself avoids the family.
  if (!is_h_free(g.graph(), h))
    throw InputError("host graph is not free of the forbidden family");

  Rational lhs = multi_density(fs, g);

  std::vector<Flag> head_flags(fs.begin(), fs.begin() + s);
  Rational rhs = 0;
  for (const Flag& mid : enumerate_flags(TypeSigma{g.type_graph()}, n, h)) {
    Rational inner = multi_density(head_flags, mid);
    if (inner == 0) continue;
    std::vector<Flag> outer;
    outer.push_back(mid);
    outer.insert(outer.end(), fs.begin() + s, fs.end());
    rhs += inner * multi_density(outer, g);
  }
  return lhs == rhs;
}

}  // namespace flagbound
