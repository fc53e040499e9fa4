// Hermitian eigendecomposition and derived matrix functions.
//
// The eigensolver is a cyclic Jacobi iteration on the full complex matrix;
// it is simple, accurate and fast enough for the dimensions this library
// targets. Matrix functions (sqrt, inverse sqrt, fidelity) are evaluated
// through the spectral decomposition.
#pragma once

#include <vector>

#include "statedist/complex_matrix.hpp"

namespace statedist {

// Relative eigenvalue cutoff below which a direction is treated as lying
// outside the support of a positive semidefinite operator.
inline constexpr double kSupportRelTol = 1e-12;

struct SpectralDecomposition {
    std::vector<double> eigenvalues;  // descending
    ComplexMatrix eigenvectors;       // column j pairs with eigenvalues[j]
};

// Full decomposition of a Hermitian matrix (deviation <= 1e-10 required).
// Throws ValidationError for non-Hermitian input and std::runtime_error if
// the sweep cap is exceeded.
SpectralDecomposition eig_hermitian(const ComplexMatrix& h);

// Eigenvalues only (descending); cheaper when vectors are not needed.
std::vector<double> eig_hermitian_values(const ComplexMatrix& h);

// Principal square root of a PSD matrix. Eigenvalues in [-1e-6, 0) are
// clamped to zero; anything below -1e-6 is rejected as not PSD.
ComplexMatrix matrix_sqrt(const ComplexMatrix& h);

// lambda^(-1/2) on the support, zero elsewhere. Eigenvalues at or below
// rel_tol * lambda_max count as outside the support.
ComplexMatrix inv_sqrt_on_support(const ComplexMatrix& h, double rel_tol = kSupportRelTol);

// Sum of singular values, via the eigenvalues of M^dag M (or M M^dag,
// whichever is smaller). Negative rounding is clamped to zero.
double trace_norm(const ComplexMatrix& m);

// (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2
double fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma);

// tr(rho^2) for Hermitian rho
double purity(const ComplexMatrix& rho);

}  // namespace statedist
