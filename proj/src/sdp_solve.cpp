#include "flagbound/sdp_solve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace flagbound {

EigenDecomposition jacobi_eigen(const DMatrix& m) {
  int n = m.dim;
  if (n < 1) throw InputError("empty matrix");
  if (n > 64) throw CapacityError("matrix dimension exceeds eigensolver limit of 64");
  double maxabs = 0.0;
  for (double v : m.a) maxabs = std::max(maxabs, std::fabs(v));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::fabs(m.at(i, j) - m.at(j, i)) > 1e-9 * std::max(1.0, maxabs))
        throw InputError("matrix is not symmetric");

  DMatrix a = m;
  // Average away harmless asymmetry in the last bits.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = 0.5 * (a.at(i, j) + a.at(j, i));
      a.at(i, j) = v;
      a.at(j, i) = v;
    }
  DMatrix v(n);
  for (int i = 0; i < n; ++i) v.at(i, i) = 1.0;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a.at(i, j) * a.at(i, j);
    if (off <= 1e-28 * std::max(1.0, maxabs * maxabs)) break;

    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        double apq = a.at(p, q);
        if (apq == 0.0) continue;
        double app = a.at(p, p), aqq = a.at(q, q);
        double tau = (aqq - app) / (2.0 * apq);
        double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        for (int i = 0; i < n; ++i) {
          double aip = a.at(i, p), aiq = a.at(i, q);
          a.at(i, p) = c * aip - s * aiq;
          a.at(i, q) = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          double api = a.at(p, i), aqi = a.at(q, i);
          a.at(p, i) = c * api - s * aqi;
          a.at(q, i) = s * api + c * aqi;
        }
        for (int i = 0; i < n; ++i) {
          double vip = v.at(i, p), viq = v.at(i, q);
          v.at(i, p) = c * vip - s * viq;
          v.at(i, q) = s * vip + c * viq;
        }
      }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a.at(x, x) < a.at(y, y); });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = DMatrix(n);
  for (int c = 0; c < n; ++c) {
    out.values[c] = a.at(order[c], order[c]);
    for (int r = 0; r < n; ++r) out.vectors.at(r, c) = v.at(r, order[c]);
  }
  return out;
}

DMatrix project_psd(const DMatrix& m) {
  EigenDecomposition ed = jacobi_eigen(m);
  int n = m.dim;
  DMatrix out(n);
  for (int c = 0; c < n; ++c) {
    double lam = ed.values[c];
    if (lam <= 0.0) continue;
    for (int i = 0; i < n; ++i) {
      double vi = ed.vectors.at(i, c) * lam;
      for (int j = 0; j < n; ++j) out.at(i, j) += vi * ed.vectors.at(j, c);
    }
  }
  // Exact symmetry, not just up to rounding.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = 0.5 * (out.at(i, j) + out.at(j, i));
      out.at(i, j) = v;
      out.at(j, i) = v;
    }
  return out;
}

namespace {

void validate(const SolverConfig& cfg) {
  if (cfg.max_iters < 1) throw InputError("max_iters must be positive");
  if (!(cfg.initial_step > 0.0)) throw InputError("initial_step must be positive");
  if (!(cfg.step_decay >= 0.0)) throw InputError("step_decay must be nonnegative");
  if (!(cfg.smoothing_temperature >= 0.0))
    throw InputError("smoothing_temperature must be nonnegative");
  if (!(cfg.tolerance > 0.0)) throw InputError("tolerance must be positive");
}

}  // namespace

NumericSolution solve(const SdpProblem& p, const SolverConfig& cfg) {
  validate(cfg);
  int m = static_cast<int>(p.graphs.size());
  int nb = static_cast<int>(p.blocks.size());

  std::vector<double> rhs(m);
  for (int g = 0; g < m; ++g) rhs[g] = p.rhs[g].get_d();
  std::vector<std::vector<DMatrix>> md(nb);
  for (int b = 0; b < nb; ++b) {
    int d = static_cast<int>(p.blocks[b].flags.size());
    md[b].assign(m, DMatrix(d));
    for (int g = 0; g < m; ++g)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          md[b][g].at(i, j) = p.blocks[b].m[g].at(i, j).get_d();
  }

  // Tiny symmetric jitter so distinct seeds take distinct paths; projection
  // keeps it PSD.
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> jitter(-1e-8, 1e-8);
  std::vector<DMatrix> q(nb);
  for (int b = 0; b < nb; ++b) {
    int d = static_cast<int>(p.blocks[b].flags.size());
    DMatrix init(d);
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) {
        double v = jitter(rng);
        init.at(i, j) = v;
        init.at(j, i) = v;
      }
    q[b] = project_psd(init);
  }

  auto eval = [&](const std::vector<DMatrix>& qs, std::vector<double>& vals) {
    double worst = -std::numeric_limits<double>::infinity();
    for (int g = 0; g < m; ++g) {
      double v = rhs[g];
      for (int b = 0; b < nb; ++b) {
        const DMatrix& mg = md[b][g];
        const DMatrix& qb = qs[b];
        double dot = 0.0;
        for (std::size_t t = 0; t < mg.a.size(); ++t) dot += mg.a[t] * qb.a[t];
        v += dot;
      }
      vals[g] = v;
      worst = std::max(worst, v);
    }
    return worst;
  };

  std::vector<double> vals(m);
  double cur = eval(q, vals);
  std::vector<DMatrix> best_q = q;
  double best = cur;
  NumericSolution ns;
  ns.history.reserve(cfg.max_iters);

  if (nb == 0) {
    ns.lambda = best;
    ns.history.push_back(best);
    return ns;
  }

  int stall = 0;
  double marked_best = best;
  for (int t = 1; t <= cfg.max_iters; ++t) {
    // Subgradient of the softmax smoothing: a convex combination of the
    // per-constraint gradients M_bG weighted toward the active constraints.
    // The temperature anneals toward zero so the smoothed optimum approaches
    // the true max rather than sitting temp*log(m) above it.
    std::vector<double> w(m, 0.0);
    double temp = cfg.smoothing_temperature / std::sqrt(static_cast<double>(t));
    if (temp > 0.0) {
      double sum = 0.0;
      for (int g = 0; g < m; ++g) {
        w[g] = std::exp((vals[g] - cur) / temp);
        sum += w[g];
      }
      for (int g = 0; g < m; ++g) w[g] /= sum;
    } else {
      for (int g = 0; g < m; ++g)
        if (vals[g] == cur) {
          w[g] = 1.0;
          break;
        }
    }

    double eta = cfg.initial_step / (1.0 + cfg.step_decay * std::sqrt(static_cast<double>(t)));
    for (int b = 0; b < nb; ++b) {
      DMatrix step = q[b];
      for (int g = 0; g < m; ++g) {
        if (w[g] == 0.0) continue;
        const DMatrix& mg = md[b][g];
        for (std::size_t i = 0; i < step.a.size(); ++i) step.a[i] -= eta * w[g] * mg.a[i];
      }
      q[b] = project_psd(step);
    }

    cur = eval(q, vals);
    if (cur < best) {
      best = cur;
      best_q = q;
    }
    ns.history.push_back(best);

    // Stop once a long stretch brings no improvement worth tolerance.
    if (marked_best - best >= cfg.tolerance) {
      marked_best = best;
      stall = 0;
    } else if (++stall >= 2000) {
      break;
    }
  }

  ns.q = std::move(best_q);
  std::vector<double> final_vals(m);
  ns.lambda = eval(ns.q, final_vals);
  return ns;
}

}  // namespace flagbound
