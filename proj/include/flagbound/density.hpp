#pragma once

#include <map>
#include <vector>

#include "flagbound/flag.hpp"
#include "flagbound/rational.hpp"

namespace flagbound {

// Probability that a uniformly random set of |f|-k unlabeled vertices of g,
// together with g's labels, induces a flag isomorphic to f. Both flags must
// have the same type (identical labeled prefix) and |f| <= |g|.
Rational density(const Flag& f, const Flag& g);

// Joint density: the f_i are landed on pairwise disjoint random unlabeled
// vertex sets of g, all sharing g's labels. Requires a common type and
// sum(|f_i| - k) <= |g| - k.
Rational multi_density(const std::vector<Flag>& fs, const Flag& g);

// Coefficients of f written in the basis F_n: form of F -> p(f; F) for each
// F in F_n over the family h, zero entries omitted.
std::map<FlagForm, Rational> expand_density(const Flag& f, int n, const FamilySpec& h);

// Exact check of the splitting identity
//   p(f_1,...,f_t; g) = sum over F in F_n of
//       p(f_1,...,f_s; F) * p(F, f_{s+1},...,f_t; g).
// Throws InputError when the size hypotheses fail; returns the comparison
// result otherwise.
bool check_chain_rule(const std::vector<Flag>& fs, const Flag& g, int s, int n,
                      const FamilySpec& h);

}  // namespace flagbound
