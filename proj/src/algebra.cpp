#include "flagbound/algebra.hpp"

#include <algorithm>
#include <functional>

namespace flagbound {

AlgebraElement::AlgebraElement(const FamilySpec& family, const TypeSigma& sigma, int size)
    : family_(family), sigma_(sigma), size_(size) {
  if (size < sigma.size()) throw InputError("element size smaller than type size");
  if (size > kMaxVertices)
    throw CapacityError("element size " + std::to_string(size) + " exceeds limit of " +
                        std::to_string(kMaxVertices));
}

Rational AlgebraElement::coeff(const FlagForm& form) const {
  auto it = coeffs_.find(form);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_coeff(const FlagForm& form, const Rational& c) {
  if (form.n != size_ || form.k != sigma_.size())
    throw InputError("flag form does not match element shape");
  auto it = coeffs_.find(form);
  if (it == coeffs_.end()) {
    if (c != 0) coeffs_.emplace(form, c);
    return;
  }
  it->second += c;
  if (it->second == 0) coeffs_.erase(it);
}

AlgebraElement lift(const Flag& f, const FamilySpec& h) {
  if (!is_h_free(f.graph(), h))
    throw InputError("flag graph is not free of the forbidden family");
  AlgebraElement a(h, TypeSigma{f.type_graph()}, f.size());
  a.add_coeff(flag_canonical_form(f), Rational(1));
  return a;
}

AlgebraElement expand_to(const AlgebraElement& a, int n) {
  if (n < a.size()) throw InputError("cannot expand to a smaller size");
  if (n == a.size()) return a;
  AlgebraElement out(a.family(), a.sigma(), n);
  for (const auto& [form, c] : a.coeffs()) {
    Flag f = canonical_flag(form);
    for (const auto& [big_form, d] : expand_density(f, n, a.family()))
      out.add_coeff(big_form, c * d);
  }
  return out;
}

namespace {

void require_compatible(const AlgebraElement& a, const AlgebraElement& b) {
  if (!(a.family() == b.family()))
    throw InputError("elements built over different forbidden families");
  if (!(a.sigma() == b.sigma()))
    throw InputError("elements have different types");
}

}  // namespace

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  require_compatible(a, b);
  int n = std::max(a.size(), b.size());
  AlgebraElement ea = expand_to(a, n);
  AlgebraElement out = expand_to(b, n);
  for (const auto& [form, c] : ea.coeffs()) out.add_coeff(form, c);
  return out;
}

AlgebraElement scale(const Rational& c, const AlgebraElement& a) {
  AlgebraElement out(a.family(), a.sigma(), a.size());
  if (c == 0) return out;
  for (const auto& [form, v] : a.coeffs()) out.add_coeff(form, c * v);
  return out;
}

AlgebraElement product(const AlgebraElement& a, const AlgebraElement& b) {
  require_compatible(a, b);
  int k = a.sigma().size();
  int n = a.size() + b.size() - k;
  if (n > kMaxVertices)
    throw CapacityError("product size " + std::to_string(n) + " exceeds limit of " +
                        std::to_string(kMaxVertices));
  AlgebraElement out(a.family(), a.sigma(), n);
  std::vector<Flag> hosts = enumerate_flags(a.sigma(), n, a.family());
  for (const auto& [fa, ca] : a.coeffs()) {
    Flag flag_a = canonical_flag(fa);
    for (const auto& [fb, cb] : b.coeffs()) {
      Flag flag_b = canonical_flag(fb);
      Rational w = ca * cb;
      for (const Flag& host : hosts) {
        Rational d = multi_density({flag_a, flag_b}, host);
        if (d != 0) out.add_coeff(flag_canonical_form(host), w * d);
      }
    }
  }
  return out;
}

bool elements_equal(const AlgebraElement& a, const AlgebraElement& b) {
  require_compatible(a, b);
  int n = std::max(a.size(), b.size());
  AlgebraElement ea = expand_to(a, n);
  AlgebraElement eb = expand_to(b, n);
  return ea.coeffs() == eb.coeffs();
}

Rational q_sigma(const Flag& f) {
  int k = f.type_size();
  int n = f.size();
  if (k == 0) return Rational(1);

  const Graph& sg = f.type_graph();
  const Graph& g = f.graph();
  FlagForm target = flag_canonical_form(f);

  // Walk all injective tuples (theta(0), ..., theta(k-1)) of vertices.
  mpz_class count = 0;
  std::vector<int> tuple(k);
  std::vector<bool> used(n, false);
  std::function<void(int)> walk = [&](int i) {
    if (i == k) {
      Flag relabeled(g, tuple);
      if (flag_canonical_form(relabeled) == target) ++count;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      // The labeling must copy the type's adjacency to be a flag of type
      // sigma at all.
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (sg.edge(j, i) != g.edge(tuple[j], v)) ok = false;
      if (!ok) continue;
      used[v] = true;
      tuple[i] = v;
      walk(i + 1);
      used[v] = false;
    }
  };
  walk(0);

  Rational r(count, falling_factorial(n, k));
  r.canonicalize();
  return r;
}

AlgebraElement downward(const AlgebraElement& a) {
  AlgebraElement out(a.family(), TypeSigma{Graph(0)}, a.size());
  for (const auto& [form, c] : a.coeffs()) {
    Flag f = canonical_flag(form);
    CanonicalForm cf = canonical_form(f.graph());
    out.add_coeff(FlagForm{cf.n, 0, cf.bits}, c * q_sigma(f));
  }
  return out;
}

std::string format_element(const AlgebraElement& a) {
  std::string s;
  for (const auto& [form, c] : a.coeffs()) {
    s += format_rational(c);
    s += "  ";
    s += format_flag(canonical_flag(form));
    s += "\n";
  }
  return s;
}

}  // namespace flagbound
