#pragma once

#include <map>
#include <string>

#include "flagbound/density.hpp"

namespace flagbound {

// A formal rational combination of the flags in F_size^sigma over a fixed
// forbidden family. Coefficients are keyed by canonical flag form; absent
// keys are zero. Elements of different sizes compare and combine after
// rewriting in a common larger basis via expand_to.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(const FamilySpec& family, const TypeSigma& sigma, int size);

  const FamilySpec& family() const { return family_; }
  const TypeSigma& sigma() const { return sigma_; }
  int size() const { return size_; }
  const std::map<FlagForm, Rational>& coeffs() const { return coeffs_; }

  Rational coeff(const FlagForm& form) const;
  void add_coeff(const FlagForm& form, const Rational& c);

 private:
  FamilySpec family_;
  TypeSigma sigma_;
  int size_ = 0;
  std::map<FlagForm, Rational> coeffs_;
};

// The single flag f as an element of F_{|f|}^sigma.
AlgebraElement lift(const Flag& f, const FamilySpec& h);

// Rewrite in the size-n basis using p(F; .) coefficients. n >= size.
AlgebraElement expand_to(const AlgebraElement& a, int n);

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const Rational& c, const AlgebraElement& a);

// Bilinear product landing in size |a| + |b| - |sigma|: coefficients are the
// joint densities p(F, G; H) over that basis.
AlgebraElement product(const AlgebraElement& a, const AlgebraElement& b);

// Equality as algebra elements: compare after expansion to a common size.
bool elements_equal(const AlgebraElement& a, const AlgebraElement& b);

// Probability that a uniformly random injective labeling of f's type into
// f's graph reproduces a flag isomorphic to f. Always in (0, 1].
Rational q_sigma(const Flag& f);

// Label-forgetting average: each flag F maps to q_sigma(F) times its
// underlying unlabeled graph. The result is an element over the empty type.
AlgebraElement downward(const AlgebraElement& a);

// One line per nonzero coefficient, "p/q  flag", sorted by flag form.
std::string format_element(const AlgebraElement& a);

}  // namespace flagbound
