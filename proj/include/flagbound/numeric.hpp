#pragma once

#include <cstdint>
#include <vector>

#include "flagbound/errors.hpp"

namespace flagbound {

// Dense square matrix of doubles, row-major. Small (solver blocks are tiny),
// so no attempt at sparsity.
struct DMatrix {
  int dim = 0;
  std::vector<double> a;

  DMatrix() = default;
  explicit DMatrix(int d) : dim(d), a(static_cast<std::size_t>(d) * d, 0.0) {}

  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * dim + j]; }
};

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  DMatrix vectors;             // column i pairs with values[i]
};

struct SolverConfig {
  int max_iters = 20000;
  double initial_step = 1.0;
  double step_decay = 1.0;
  double smoothing_temperature = 0.01;
  double tolerance = 1e-9;
  std::uint64_t seed = 1;
};

// Floating-point candidate: a value for the bound variable and one symmetric
// matrix per positive-semidefinite block, plus the per-iteration trace of the
// best objective seen (non-increasing).
struct NumericSolution {
  double lambda = 0.0;
  std::vector<DMatrix> q;
  std::vector<double> history;
};

}  // namespace flagbound
