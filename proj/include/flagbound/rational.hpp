#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace flagbound {

// All densities and certificate data are exact rationals. GMP's mpq_class
// keeps values canonical (lowest terms, positive denominator) after every
// arithmetic step, which is exactly the invariant we need.
using Rational = mpq_class;

// num/den as machine ints, canonicalized. Throws InputError on den == 0.
Rational make_rational(long num, long den);

// Binomial coefficient as an exact integer; 0 when k < 0 or k > n.
mpz_class binomial(int n, int k);

// n * (n-1) * ... * (n-k+1) as an exact integer.
mpz_class falling_factorial(int n, int k);

// Always "p/q" with q >= 1, e.g. "0/1", "-2/3". Inverse of parse_rational.
std::string format_rational(const Rational& q);

// Accepts "p/q" or a bare integer "p". Throws ParseError on anything else.
Rational parse_rational(const std::string& text);

// Dense symmetric-intent square matrix of rationals, row-major.
struct RatMatrix {
  int dim = 0;
  std::vector<Rational> a;

  RatMatrix() = default;
  explicit RatMatrix(int d) : dim(d), a(static_cast<std::size_t>(d) * d, Rational(0)) {}

  Rational& at(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }
  const Rational& at(int i, int j) const { return a[static_cast<std::size_t>(i) * dim + j]; }

  bool is_symmetric() const;
  bool operator==(const RatMatrix&) const = default;
};

}  // namespace flagbound
