#include "lapack_backend.hpp"

#include <string>

#include <lapacke.h>

#include "liftdim/config.hpp"

extern "C" {
// BLAS routines, not covered by lapacke.h.
void zherk_(const char* uplo, const char* trans, const int* n, const int* k, const double* alpha,
            const void* a, const int* lda, const double* beta, void* c, const int* ldc);
void zgemm_(const char* transa, const char* transb, const int* m, const int* n, const int* k,
            const void* alpha, const void* a, const int* lda, const void* b, const int* ldb,
            const void* beta, void* c, const int* ldc);
void openblas_set_num_threads(int);
char* openblas_get_corename(void);
}

namespace liftdim::backend {

namespace {

[[noreturn]] void fail(const char* routine, int info) {
    throw NumericalError(std::string(routine) + " failed, info=" + std::to_string(info));
}

}  // namespace

Eigen::VectorXd eigvalsh(const Eigen::MatrixXcd& M) {
    const int n = static_cast<int>(M.rows());
    Eigen::MatrixXcd work = 0.5 * (M + M.adjoint());
    Eigen::VectorXd w(n);
    int info = LAPACKE_zheev(LAPACK_COL_MAJOR, 'N', 'L', n,
                             reinterpret_cast<lapack_complex_double*>(work.data()), n, w.data());
    if (info != 0) fail("zheev", info);
    return w;
}

Eigen::VectorXd eigvalsh(const Eigen::MatrixXd& M) {
    const int n = static_cast<int>(M.rows());
    Eigen::MatrixXd work = 0.5 * (M + M.transpose());
    Eigen::VectorXd w(n);
    int info = LAPACKE_dsyev(LAPACK_COL_MAJOR, 'N', 'L', n, work.data(), n, w.data());
    if (info != 0) fail("dsyev", info);
    return w;
}

Eigen::VectorXcd eigvals_general(const Eigen::MatrixXcd& M) {
    const int n = static_cast<int>(M.rows());
    Eigen::MatrixXcd work = M;
    Eigen::VectorXcd w(n);
    int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n,
                             reinterpret_cast<lapack_complex_double*>(work.data()), n,
                             reinterpret_cast<lapack_complex_double*>(w.data()), nullptr, 1,
                             nullptr, 1);
    if (info != 0) fail("zgeev", info);
    return w;
}

Eigen::VectorXcd eigvals_general(const Eigen::MatrixXd& M) {
    const int n = static_cast<int>(M.rows());
    Eigen::MatrixXd work = M;
    Eigen::VectorXd wr(n), wi(n);
    int info = LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', 'N', n, work.data(), n, wr.data(), wi.data(),
                             nullptr, 1, nullptr, 1);
    if (info != 0) fail("dgeev", info);
    Eigen::VectorXcd w(n);
    for (int i = 0; i < n; ++i) w(i) = std::complex<double>(wr(i), wi(i));
    return w;
}

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& M) {
    const int m = static_cast<int>(M.rows());
    const int n = static_cast<int>(M.cols());
    Eigen::MatrixXcd work = M;
    Eigen::VectorXd s(std::min(m, n));
    Eigen::VectorXd superb(std::max(1, std::min(m, n) - 1));
    int info = LAPACKE_zgesvd(LAPACK_COL_MAJOR, 'N', 'N', m, n,
                              reinterpret_cast<lapack_complex_double*>(work.data()), m, s.data(),
                              nullptr, 1, nullptr, 1, superb.data());
    if (info != 0) fail("zgesvd", info);
    return s;
}

Eigen::MatrixXcd gram_aah(const Eigen::MatrixXcd& A) {
    const int n = static_cast<int>(A.rows());
    const int k = static_cast<int>(A.cols());
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
    const double alpha = 1.0, beta = 0.0;
    zherk_("L", "N", &n, &k, &alpha, A.data(), &n, &beta, C.data(), &n);
    C.triangularView<Eigen::StrictlyUpper>() = C.adjoint();
    // zherk leaves the diagonal's imaginary parts untouched (they are zero by
    // construction here, but keep them exact).
    for (int i = 0; i < n; ++i) C(i, i) = std::complex<double>(C(i, i).real(), 0.0);
    return C;
}

Eigen::MatrixXcd matmul(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
    const int m = static_cast<int>(A.rows());
    const int k = static_cast<int>(A.cols());
    const int n = static_cast<int>(B.cols());
    Eigen::MatrixXcd C(m, n);
    const std::complex<double> alpha(1.0, 0.0), beta(0.0, 0.0);
    zgemm_("N", "N", &m, &n, &k, &alpha, A.data(), &m, B.data(), &k, &beta, C.data(), &m);
    return C;
}

void set_num_threads(int n) {
    if (n > 0) openblas_set_num_threads(n);
}

std::string active_core_name() {
    return openblas_get_corename();
}

}  // namespace liftdim::backend
