#include "flagbound/rational.hpp"

#include <cctype>

#include "flagbound/errors.hpp"

namespace flagbound {

Rational make_rational(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

mpz_class binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

mpz_class falling_factorial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r = 1;
  for (int i = 0; i < k; ++i) r *= n - i;
  return r;
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool looks_like_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t start = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (start == std::string::npos)
    throw ParseError("empty rational", 0);
  std::string body = text.substr(start, end - start + 1);

  std::size_t slash = body.find('/');
  std::string num = slash == std::string::npos ? body : body.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (!looks_like_integer(num))
    throw ParseError("bad rational numerator '" + num + "'", start);
  if (!looks_like_integer(den))
    throw ParseError("bad rational denominator '" + den + "'",
                     start + (slash == std::string::npos ? 0 : slash + 1));
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("rational with zero denominator", start);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

bool RatMatrix::is_symmetric() const {
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

}  // namespace flagbound
