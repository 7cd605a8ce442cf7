#pragma once

// Thin wrappers over LAPACK/BLAS for the dense solves the spectra module
// needs. Eigen's own solvers are unblocked and too slow for the ~5000^2
// Hermitian problems of the default configuration; OpenBLAS-backed LAPACK
// handles them in seconds.

#include <complex>
#include <string>

#include <Eigen/Dense>

namespace liftdim::backend {

/// Eigenvalues of a Hermitian matrix, ascending. The input is symmetrized
/// as (M + M^H)/2 before the solve. Throws NumericalError on failure.
Eigen::VectorXd eigvalsh(const Eigen::MatrixXcd& M);
Eigen::VectorXd eigvalsh(const Eigen::MatrixXd& M);

/// Eigenvalues of a general square matrix (zgeev/dgeev), unordered.
Eigen::VectorXcd eigvals_general(const Eigen::MatrixXcd& M);
Eigen::VectorXcd eigvals_general(const Eigen::MatrixXd& M);

/// Singular values, descending (zgesvd, values only).
Eigen::VectorXd singular_values(const Eigen::MatrixXcd& M);

/// C = A * A^H via zherk (Hermitian rank-k update), full matrix filled in.
Eigen::MatrixXcd gram_aah(const Eigen::MatrixXcd& A);

/// C = A * B via zgemm.
Eigen::MatrixXcd matmul(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B);

/// Cap BLAS threads (OpenBLAS).
void set_num_threads(int n);

/// Kernel family OpenBLAS selected at load time (e.g. "Haswell").
std::string active_core_name();

}  // namespace liftdim::backend
