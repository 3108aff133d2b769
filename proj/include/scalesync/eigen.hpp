#pragma once

#include <complex>
#include <vector>

#include "scalesync/matrix.hpp"

namespace scalesync::mat {

/// Eigenvalues of a general real square matrix.
///
/// Pipeline: permutation isolation (rows/columns whose off-diagonal part is
/// exactly zero contribute their diagonal entry exactly — triangular inputs
/// never reach the iterative stage), radix-2 balancing, Householder reduction
/// to Hessenberg form, Francis double-shift QR with deflation.
std::vector<std::complex<double>> eigenvalues(const Matrix& m);

/// Eigenvalues of a symmetric matrix via cyclic Jacobi, ascending order.
/// Symmetry is the caller's responsibility (the upper triangle wins).
std::vector<double> symmetric_eigenvalues(const Matrix& m);

/// max |lambda| over eigenvalues(m).
double spectral_radius(const Matrix& m);

/// Induced 2-norm (largest singular value). Power iteration on m^T m with a
/// deterministic all-ones start vector; falls back to a full symmetric
/// eigendecomposition if the iteration stalls.
double spectral_norm(const Matrix& m);

/// True iff spectral_radius(m) < 1 - 1e-12 (strict stability margin).
bool is_schur(const Matrix& m);

/// True iff m is symmetric (within 1e-12 of its max entry scale) and all
/// eigenvalues exceed 1e-12. Asymmetric input raises ArgumentError.
bool is_positive_definite(const Matrix& m);

}  // namespace scalesync::mat
