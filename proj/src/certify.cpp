#include "flagbound/certify.hpp"

#include <cmath>
#include <sstream>

namespace flagbound {

Rational rationalize(double x, const mpz_class& max_denominator) {
  if (std::isnan(x) || std::isinf(x))
    throw InputError("cannot rationalize a non-finite value");
  if (max_denominator < 1) throw InputError("denominator cap must be at least 1");

  Rational exact(x);  // binary value of x, exactly
  if (exact.get_den() <= max_denominator) return exact;

  bool neg = exact < 0;
  if (neg) exact = -exact;

  // Continued-fraction walk of the exact value. Convergents h/k satisfy
  // h2 = a*h1 + h0; when k2 would blow the cap, the best semiconvergent and
  // the previous convergent are the only candidates.
  mpz_class num = exact.get_num(), den = exact.get_den();
  mpz_class h0 = 0, k0 = 1, h1 = 1, k1 = 0;
  Rational result;
  while (true) {
    mpz_class a = num / den;
    mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_denominator) {
      mpz_class t = (max_denominator - k0) / k1;
      Rational conv(h1, k1);
      conv.canonicalize();
      if (t >= 1) {
        Rational semi(t * h1 + h0, t * k1 + k0);
        semi.canonicalize();
        // Prefer the convergent on ties: it has the smaller denominator.
        result = abs(exact - semi) < abs(exact - conv) ? semi : conv;
      } else {
        result = conv;
      }
      break;
    }
    mpz_class rem = num - a * den;
    if (rem == 0) {
      result = Rational(h2, k2);
      result.canonicalize();
      break;
    }
    h0 = h1;
    k0 = k1;
    h1 = h2;
    k1 = k2;
    num = den;
    den = rem;
  }
  return neg ? Rational(-result) : result;
}

std::pair<bool, std::vector<Rational>> psd_check_rational(const RatMatrix& m) {
  if (!m.is_symmetric()) throw InputError("matrix is not symmetric");
  int n = m.dim;
  std::vector<Rational> pivots;
  if (n == 0) return {true, pivots};

  // Clear denominators once: B = D * m with D the lcm of all entry
  // denominators, so the elimination below stays in integers.
  mpz_class d = 1;
  for (const Rational& v : m.a) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<mpz_class> b(m.a.size());
  for (std::size_t i = 0; i < m.a.size(); ++i)
    b[i] = m.a[i].get_num() * (d / m.a[i].get_den());
  auto at = [&](int i, int j) -> mpz_class& { return b[static_cast<std::size_t>(i) * n + j]; };

  // Fraction-free symmetric elimination: after step k every entry is an
  // exact integer and the true pivot of the LDLT factorization is
  // piv_k / (prev_k * D). Only signs matter for the verdict; the pivots are
  // reported in unscaled rational form.
  mpz_class prev = 1;
  for (int k = 0; k < n; ++k) {
    int sel = k;
    for (int j = k + 1; j < n; ++j)
      if (at(j, j) > at(sel, sel)) sel = j;
    if (sel != k) {
      for (int i = 0; i < n; ++i) std::swap(at(k, i), at(sel, i));
      for (int i = 0; i < n; ++i) std::swap(at(i, k), at(i, sel));
    }

    mpz_class piv = at(k, k);
    Rational pk(piv, prev * d);
    pk.canonicalize();
    pivots.push_back(pk);
    if (piv < 0) return {false, pivots};
    if (piv == 0) {
      // A zero pivot was the largest remaining diagonal entry; PSD forces
      // the whole remaining block to vanish.
      for (int i = k; i < n; ++i)
        for (int j = k; j < n; ++j)
          if (at(i, j) != 0) return {false, pivots};
      for (int r = k + 1; r < n; ++r) pivots.push_back(Rational(0));
      return {true, pivots};
    }

    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j <= i; ++j) {
        mpz_class v = (at(i, j) * piv - at(i, k) * at(j, k)) / prev;
        at(i, j) = v;
        at(j, i) = v;
      }
    prev = piv;
  }
  return {true, pivots};
}

RatMatrix psd_repair(const RatMatrix& m) {
  if (!m.is_symmetric()) throw InputError("matrix is not symmetric");
  int n = m.dim;
  RatMatrix out(n);
  if (n == 0) return out;

  // Rational symmetric elimination with diagonal pivoting; the sum of
  // d * l * l^T over the positive pivots reproduces m exactly when m is PSD
  // and is the natural PSD substitute otherwise.
  RatMatrix a = m;
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;

  for (int k = 0; k < n; ++k) {
    int sel = k;
    for (int j = k + 1; j < n; ++j)
      if (a.at(j, j) > a.at(sel, sel)) sel = j;
    if (a.at(sel, sel) <= 0) break;
    if (sel != k) {
      for (int i = 0; i < n; ++i) std::swap(a.at(k, i), a.at(sel, i));
      for (int i = 0; i < n; ++i) std::swap(a.at(i, k), a.at(i, sel));
      std::swap(idx[k], idx[sel]);
    }

    Rational d = a.at(k, k);
    std::vector<Rational> l(n, Rational(0));
    l[idx[k]] = 1;
    for (int i = k + 1; i < n; ++i) l[idx[i]] = a.at(i, k) / d;
    for (int i = 0; i < n; ++i) {
      if (l[i] == 0) continue;
      Rational di = d * l[i];
      for (int j = 0; j < n; ++j)
        if (l[j] != 0) out.at(i, j) += di * l[j];
    }

    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j <= i; ++j) {
        Rational v = a.at(i, j) - a.at(i, k) * a.at(k, j) / d;
        a.at(i, j) = v;
        a.at(j, i) = v;
      }
  }
  return out;
}

Rational tighten_lambda(const SdpProblem& p, const std::vector<RatMatrix>& q) {
  if (q.size() != p.blocks.size())
    throw InputError("block count mismatch");
  for (std::size_t b = 0; b < q.size(); ++b)
    if (q[b].dim != static_cast<int>(p.blocks[b].flags.size()))
      throw InputError("block dimension mismatch");

  Rational best;
  bool first = true;
  for (std::size_t g = 0; g < p.graphs.size(); ++g) {
    Rational v = p.rhs[g];
    for (std::size_t b = 0; b < q.size(); ++b) {
      const RatMatrix& mg = p.blocks[b].m[g];
      for (int i = 0; i < mg.dim; ++i)
        for (int j = 0; j < mg.dim; ++j) v += mg.at(i, j) * q[b].at(i, j);
    }
    if (first || v > best) {
      best = v;
      first = false;
    }
  }
  return best;
}

Certificate round_solution(const SdpProblem& p, const NumericSolution& ns,
                           long max_denominator) {
  if (max_denominator < 1) throw InputError("denominator cap must be at least 1");
  if (ns.q.size() != p.blocks.size())
    throw InputError("block count mismatch");
  for (std::size_t b = 0; b < ns.q.size(); ++b)
    if (ns.q[b].dim != static_cast<int>(p.blocks[b].flags.size()))
      throw InputError("block dimension mismatch");

  std::vector<mpz_class> caps;
  for (mpz_class c = 1; c < max_denominator; c *= 2) caps.push_back(c);
  caps.push_back(max_denominator);

  Certificate best;
  bool first = true;
  for (const mpz_class& cap : caps) {
    std::vector<RatMatrix> q;
    for (std::size_t b = 0; b < ns.q.size(); ++b) {
      const DMatrix& src = ns.q[b];
      RatMatrix r(src.dim);
      for (int i = 0; i < src.dim; ++i)
        for (int j = i; j < src.dim; ++j) {
          Rational v = rationalize(0.5 * (src.at(i, j) + src.at(j, i)), cap);
          r.at(i, j) = v;
          r.at(j, i) = v;
        }
      if (!psd_check_rational(r).first) r = psd_repair(r);
      q.push_back(std::move(r));
    }
    Rational lambda = tighten_lambda(p, q);
    if (first || lambda < best.lambda) {
      best.lambda = lambda;
      best.q = std::move(q);
      first = false;
    }
  }
  best.fingerprint = p.fingerprint;
  return best;
}

VerificationReport verify(const SdpProblem& p, const Certificate& c) {
  if (c.fingerprint != p.fingerprint)
    throw InputError("certificate fingerprint does not match the problem");
  if (c.q.size() != p.blocks.size())
    throw InputError("block count mismatch");
  for (std::size_t b = 0; b < c.q.size(); ++b) {
    if (c.q[b].dim != static_cast<int>(p.blocks[b].flags.size()))
      throw InputError("block dimension mismatch");
    if (!c.q[b].is_symmetric())
      throw InputError("certificate block is not symmetric");
  }

  VerificationReport rep;
  rep.bound = c.lambda;
  bool ok = true;
  for (const RatMatrix& q : c.q) {
    auto [psd, pivots] = psd_check_rational(q);
    rep.psd_ok.push_back(psd);
    rep.pivots.push_back(std::move(pivots));
    ok = ok && psd;
  }
  for (std::size_t g = 0; g < p.graphs.size(); ++g) {
    Rational v = p.rhs[g];
    for (std::size_t b = 0; b < c.q.size(); ++b) {
      const RatMatrix& mg = p.blocks[b].m[g];
      for (int i = 0; i < mg.dim; ++i)
        for (int j = 0; j < mg.dim; ++j) v += mg.at(i, j) * c.q[b].at(i, j);
    }
    Rational slack = c.lambda - v;
    rep.slacks.push_back(slack);
    if (slack < 0) ok = false;
  }
  rep.valid = ok;
  return rep;
}

std::string format_certificate(const Certificate& c) {
  std::ostringstream out;
  out << "flagbound-cert v1\n";
  out << "fingerprint " << c.fingerprint << "\n";
  out << "lambda " << format_rational(c.lambda) << "\n";
  for (std::size_t b = 0; b < c.q.size(); ++b) {
    const RatMatrix& q = c.q[b];
    out << "Q " << b << " " << q.dim << "\n";
    for (int i = 0; i < q.dim; ++i) {
      for (int j = 0; j < q.dim; ++j) {
        if (j > 0) out << " ";
        out << format_rational(q.at(i, j));
      }
      out << "\n";
    }
  }
  return out.str();
}

Certificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "flagbound-cert v1")
    throw ParseError("missing certificate header");

  Certificate c;
  if (!std::getline(in, line) || line.compare(0, 12, "fingerprint ") != 0)
    throw ParseError("missing fingerprint line");
  c.fingerprint = line.substr(12);
  if (c.fingerprint.size() != 16 ||
      c.fingerprint.find_first_not_of("0123456789abcdef") != std::string::npos)
    throw ParseError("bad fingerprint value");

  if (!std::getline(in, line) || line.compare(0, 7, "lambda ") != 0)
    throw ParseError("missing lambda line");
  c.lambda = parse_rational(line.substr(7));

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string kw;
    std::size_t idx;
    int dim;
    if (!(ls >> kw >> idx >> dim) || kw != "Q")
      throw ParseError("expected 'Q <index> <dim>' line, got '" + line + "'");
    if (idx != c.q.size())
      throw ParseError("certificate blocks out of order at '" + line + "'");
    if (dim < 0 || dim > 1024) throw ParseError("unreasonable block dimension");
    RatMatrix q(dim);
    for (int i = 0; i < dim; ++i) {
      if (!std::getline(in, line))
        throw ParseError("certificate truncated inside a block");
      std::istringstream row(line);
      for (int j = 0; j < dim; ++j) {
        std::string tok;
        if (!(row >> tok))
          throw ParseError("certificate row too short: '" + line + "'");
        q.at(i, j) = parse_rational(tok);
      }
      std::string extra;
      if (row >> extra)
        throw ParseError("certificate row too long: '" + line + "'");
    }
    c.q.push_back(std::move(q));
  }
  return c;
}

}  // namespace flagbound
