#pragma once

#include "flagbound/numeric.hpp"
#include "flagbound/sdp_build.hpp"

namespace flagbound {

// Full eigendecomposition of a symmetric matrix (dim <= 64) by cyclic Jacobi
// rotations. Eigenvalues ascending; reconstruction error stays within 1e-10
// relative to the largest entry.
EigenDecomposition jacobi_eigen(const DMatrix& m);

// Nearest positive-semidefinite matrix in Frobenius norm: clamp negative
// eigenvalues to zero.
DMatrix project_psd(const DMatrix& m);

// Minimize max_G (rhs_G + sum_b <M_bG, Q_b>) over PSD blocks Q_b by
// projected subgradient descent on a softmax smoothing of the max. Returns
// the best iterate seen. Deterministic for a fixed config.
NumericSolution solve(const SdpProblem& p, const SolverConfig& cfg = {});

}  // namespace flagbound
