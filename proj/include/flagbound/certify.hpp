#pragma once

#include <string>
#include <vector>

#include "flagbound/numeric.hpp"
#include "flagbound/rational.hpp"
#include "flagbound/sdp_build.hpp"

namespace flagbound {

// Exact witness for an upper bound: lambda together with one PSD rational
// matrix per block. Tied to a specific assembled problem by fingerprint.
struct Certificate {
  Rational lambda;
  std::vector<RatMatrix> q;
  std::string fingerprint;
};

struct VerificationReport {
  bool valid = false;
  Rational bound;                             // the certificate's lambda
  std::vector<Rational> slacks;               // per graph, >= 0 when valid
  std::vector<bool> psd_ok;                   // per block
  std::vector<std::vector<Rational>> pivots;  // per block, diagonal pivots
};

// Best rational approximation of x with denominator <= max_denominator,
// computed exactly over x's binary value. Rejects NaN and infinities.
Rational rationalize(double x, const mpz_class& max_denominator);

// Snap a floating-point solution to rationals. Denominator caps 1, 2, 4, ...
// up to max_denominator are each tried: entries are rounded, non-PSD blocks
// repaired, and lambda re-tightened; the cap giving the smallest bound wins.
Certificate round_solution(const SdpProblem& p, const NumericSolution& ns,
                           long max_denominator);

// Exact PSD test by integer-preserving symmetric elimination. Returns the
// verdict and the diagonal pivots actually used (a negative pivot is the
// witness for failure).
std::pair<bool, std::vector<Rational>> psd_check_rational(const RatMatrix& m);

// Largest PSD matrix obtainable by keeping only the positive pivots of the
// elimination: returns m itself when m is PSD.
RatMatrix psd_repair(const RatMatrix& m);

// Smallest lambda making every constraint hold at the given block matrices:
// max over graphs of rhs + sum of inner products.
Rational tighten_lambda(const SdpProblem& p, const std::vector<RatMatrix>& q);

// Full exact check of a certificate against an assembled problem. Throws
// InputError on fingerprint or dimension mismatch; inequality or PSD
// failures come back in the report, not as exceptions.
VerificationReport verify(const SdpProblem& p, const Certificate& c);

// Text form; format then parse is the identity.
std::string format_certificate(const Certificate& c);
Certificate parse_certificate(const std::string& text);

}  // namespace flagbound
