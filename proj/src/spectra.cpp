#include "liftdim/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "lapack_backend.hpp"

namespace liftdim {

std::string to_string(SpectrumKind kind) {
    switch (kind) {
        case SpectrumKind::svd_A: return "svd_A";
        case SpectrumKind::sqrt_eig_AAdag: return "sqrt_eig_AAdag";
        case SpectrumKind::sqrt_eig_AAdag_w: return "sqrt_eig_AAdag_w";
        case SpectrumKind::sqrt_eig_approx: return "sqrt_eig_approx";
        case SpectrumKind::product_closed_form: return "product_closed_form";
    }
    return "unknown";
}

int detect_critical_index(const RealVector& values, double tau_db) {
    if (values.size() == 0) throw std::invalid_argument("detect_critical_index: empty spectrum");
    if (!(values(0) > 0.0)) {
        throw std::invalid_argument("detect_critical_index: leading value must be positive");
    }
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        const double db =
            values(i) > 0.0 ? 20.0 * std::log10(values(i) / values(0)) : -std::numeric_limits<double>::infinity();
        if (db < tau_db) return static_cast<int>(i);
    }
    return static_cast<int>(values.size());
}

bool is_hermitian(const Matrix& M, double tol) {
    if (M.rows() != M.cols()) return false;
    const double scale = M.cwiseAbs().maxCoeff();
    if (scale == 0.0) return true;
    const double asym = (M - M.adjoint()).cwiseAbs().maxCoeff();
    return asym <= tol * scale;
}

namespace {

RealVector descending(RealVector v) {
    std::sort(v.data(), v.data() + v.size(), std::greater<double>());
    return v;
}

}  // namespace

SpectrumResult svd_spectrum(const ComplexOperatorMatrix& A, double tau_db) {
    if (!A.quadrature_absorbed) {
        throw std::invalid_argument("svd_spectrum: column quadrature must be absorbed");
    }
    // Row-weight by the sqrt of the data-cell quadrature weights so singular
    // values measure the discrete L2(OD) norm.
    Matrix weighted = A.entries;
    for (Eigen::Index i = 0; i < weighted.rows(); ++i) {
        weighted.row(i) *= std::sqrt(A.row_grid.weight(static_cast<std::size_t>(i)));
    }
    SpectrumResult out;
    out.values = backend::singular_values(weighted);
    if (!out.values.allFinite()) throw NumericalError("svd_spectrum: non-finite singular values");
    out.kind = SpectrumKind::svd_A;
    out.threshold_db = tau_db;
    out.critical_index =
        out.values(0) > 0.0 ? detect_critical_index(out.values, tau_db) : 1;
    return out;
}

SpectrumResult eig_spectrum(const ComplexOperatorMatrix& M, bool hermitian, double tau_db) {
    if (M.rows() != M.cols()) throw std::invalid_argument("eig_spectrum: matrix must be square");
    if (M.rows() == 0) throw std::invalid_argument("eig_spectrum: empty matrix");

    SpectrumResult out;
    out.threshold_db = tau_db;
    if (hermitian) {
        RealVector lam = backend::eigvalsh(M.entries);
        const double lam_max = lam.size() ? std::max(lam.maxCoeff(), 0.0) : 0.0;
        for (Eigen::Index i = 0; i < lam.size(); ++i) {
            if (lam(i) < 0.0) {
                if (lam(i) < -1e-10 * lam_max) {
                    throw NumericalError("eig_spectrum: significant negative eigenvalue in a "
                                         "Hermitian PSD spectrum");
                }
                lam(i) = 0.0;
            }
        }
        out.values = descending(lam.cwiseSqrt());
        out.kind = SpectrumKind::sqrt_eig_AAdag;
    } else {
        Vector lam = backend::eigvals_general(M.entries);
        std::vector<int> order(static_cast<std::size_t>(lam.size()));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int p, int q) { return std::abs(lam(p)) > std::abs(lam(q)); });
        out.values.resize(lam.size());
        for (Eigen::Index i = 0; i < lam.size(); ++i) {
            const Complex z = lam(order[static_cast<std::size_t>(i)]);
            out.values(i) = std::sqrt(std::abs(z));
            if (std::abs(z.imag()) > 1e-6 * std::abs(z)) {
                out.complex_eig_flags.push_back(static_cast<int>(i));
            }
        }
        out.kind = SpectrumKind::sqrt_eig_AAdag_w;
    }
    if (!out.values.allFinite()) throw NumericalError("eig_spectrum: non-finite eigenvalues");
    out.critical_index = out.values(0) > 0.0 ? detect_critical_index(out.values, tau_db) : 1;
    return out;
}

}  // namespace liftdim
