#pragma once

#include <string>
#include <vector>

#include "liftdim/config.hpp"
#include "liftdim/operator_matrix.hpp"

namespace liftdim {

enum class SpectrumKind {
    svd_A,
    sqrt_eig_AAdag,
    sqrt_eig_AAdag_w,
    sqrt_eig_approx,
    product_closed_form,
};

std::string to_string(SpectrumKind kind);

/// Descending nonnegative spectrum (singular values or sqrt|eigenvalues|)
/// with the detected critical index: the first position whose value falls
/// below tau_db relative to the largest one.
struct SpectrumResult {
    RealVector values;
    SpectrumKind kind = SpectrumKind::svd_A;
    int critical_index = 0;
    double threshold_db = 0.0;
    std::vector<int> complex_eig_flags;  // indices with |Im| > 1e-6 |lambda|

    Eigen::Index size() const { return values.size(); }
};

/// Smallest i with 20 log10(values[i]/values[0]) < tau_db; values.size() if
/// none. Requires a descending spectrum with values[0] > 0.
int detect_critical_index(const RealVector& values, double tau_db);

/// Singular values of diag(sqrt(data weights)) * A. The data weights come
/// from A's row grid. Solver failure surfaces as NumericalError.
SpectrumResult svd_spectrum(const ComplexOperatorMatrix& A, double tau_db);

/// sqrt of the eigenvalue spectrum of a square operator matrix.
/// hermitian=true: symmetric solve; negatives within -1e-10 lambda_max clamp
/// to 0, anything more negative raises. hermitian=false: general solve,
/// sqrt(|lambda|) sorted by magnitude, complex flags populated.
SpectrumResult eig_spectrum(const ComplexOperatorMatrix& M, bool hermitian, double tau_db);

/// True when max|M - M^H| <= tol * max|M|. Midpoint (uniform-weight) data
/// grids make the composed AA_w^dag matrix Hermitian, which permits the
/// symmetric solver; nonuniform weights would not.
bool is_hermitian(const Matrix& M, double tol = 1e-12);

}  // namespace liftdim
