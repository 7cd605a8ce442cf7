#include <doctest.h>

#include <cmath>

#include "liftdim/forward_op.hpp"
#include "liftdim/lifting_op.hpp"
#include "liftdim/spectra.hpp"

using namespace liftdim;

namespace {

RealVector vec(std::initializer_list<double> values) {
    RealVector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double x : values) v(i++) = x;
    return v;
}

// A square operator with unit quadrature weights on both sides.
ComplexOperatorMatrix wrap_square(const Matrix& entries) {
    ComplexOperatorMatrix M;
    M.entries = entries;
    const int n = static_cast<int>(entries.rows());
    M.row_grid = GridMeta{{uniform_grid(0.0, n, n)}, "rows"};
    M.col_grid = M.row_grid;
    M.quadrature_absorbed = true;
    return M;
}

struct LiftedSetup {
    ProblemConfig config;
    ComplexOperatorMatrix A;
};

LiftedSetup build_lifted(int n_x, int n_u, int n_s) {
    LiftedSetup s;
    s.config.n_x = n_x;
    s.config.n_u = n_u;
    s.config.n_s = n_s;
    const Grid1D x = uniform_grid(-s.config.a, s.config.a, n_x);
    s.A = assemble_A(s.config, TensorGrid2D{x, x},
                     uniform_grid(s.config.r_min, s.config.r_max, n_s),
                     uniform_grid(-s.config.u_max, s.config.u_max, n_u));
    return s;
}

}  // namespace

TEST_SUITE("spectra") {

TEST_CASE("critical index on hand-built spectra") {
    CHECK(detect_critical_index(vec({1.0, 0.5, 1e-6}), -40.0) == 2);
    CHECK(detect_critical_index(vec({1.0, 1.0, 1.0}), -40.0) == 3);
    CHECK(detect_critical_index(vec({1.0, 1e-1, 1e-2, 1e-3}), -45.0) == 3);
    CHECK(detect_critical_index(vec({5.0, 0.0}), -40.0) == 1);  // zero tail
}

TEST_CASE("critical index rejects empty or nonpositive-leading input") {
    CHECK_THROWS_AS(detect_critical_index(RealVector(), -40.0), std::invalid_argument);
    CHECK_THROWS_AS(detect_critical_index(vec({0.0, 0.0}), -40.0), std::invalid_argument);
}

TEST_CASE("critical index is monotone in the threshold") {
    const RealVector v = vec({1.0, 0.7, 0.3, 0.11, 0.04, 0.012, 3e-3, 1e-3, 2e-4, 5e-5});
    int prev = 0;
    for (const double tau : {-10.0, -20.0, -30.0, -40.0, -50.0, -60.0, -90.0}) {
        const int idx = detect_critical_index(v, tau);
        CHECK(idx >= prev);
        prev = idx;
    }
}

TEST_CASE("svd of a diagonal operator") {
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 3.0;
    d(1, 1) = 4.0;
    const SpectrumResult s = svd_spectrum(wrap_square(d), -40.0);
    CHECK(s.values(0) == doctest::Approx(4.0));
    CHECK(s.values(1) == doctest::Approx(3.0));
    CHECK(s.kind == SpectrumKind::svd_A);
    CHECK(s.critical_index == 2);
}

TEST_CASE("svd of the zero operator yields zeros with critical index 1") {
    const SpectrumResult s = svd_spectrum(wrap_square(Matrix::Zero(3, 3)), -40.0);
    CHECK(s.values.maxCoeff() == 0.0);
    CHECK(s.critical_index == 1);
}

TEST_CASE("hermitian eigensqrt of identity and diag(4,1)") {
    const SpectrumResult id = eig_spectrum(wrap_square(Matrix::Identity(3, 3)), true, -40.0);
    CHECK(id.values(0) == doctest::Approx(1.0));
    CHECK(id.values(2) == doctest::Approx(1.0));

    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 4.0;
    d(1, 1) = 1.0;
    const SpectrumResult s = eig_spectrum(wrap_square(d), true, -40.0);
    CHECK(s.values(0) == doctest::Approx(2.0));
    CHECK(s.values(1) == doctest::Approx(1.0));
}

TEST_CASE("hermitian path clamps roundoff negatives and rejects real ones") {
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = -1e-12;  // within -1e-10 * lambda_max
    const SpectrumResult s = eig_spectrum(wrap_square(d), true, -40.0);
    CHECK(s.values(1) == 0.0);

    d(1, 1) = -1e-3;
    CHECK_THROWS_AS(eig_spectrum(wrap_square(d), true, -40.0), NumericalError);
}

TEST_CASE("non-square and empty matrices are rejected") {
    ComplexOperatorMatrix M;
    M.entries = Matrix::Zero(2, 3);
    CHECK_THROWS_AS(eig_spectrum(M, true, -40.0), std::invalid_argument);
    M.entries = Matrix();
    CHECK_THROWS_AS(eig_spectrum(M, true, -40.0), std::invalid_argument);
}

TEST_CASE("general eigensolve flags genuinely complex spectra") {
    Matrix rot = Matrix::Zero(2, 2);  // 90-degree rotation: eigenvalues +-i
    rot(0, 1) = -1.0;
    rot(1, 0) = 1.0;
    const SpectrumResult s = eig_spectrum(wrap_square(rot), false, -40.0);
    CHECK(s.complex_eig_flags.size() == 2);
    CHECK(s.values(0) == doctest::Approx(1.0));
}

TEST_CASE("gram consistency: svd against sqrt-eig of the composition") {
    const LiftedSetup s = build_lifted(31, 64, 12);
    const SpectrumResult sv = svd_spectrum(s.A, s.config.tau_db);
    const SpectrumResult ei =
        eig_spectrum(compose(s.A, assemble_A_adjoint(s.A, false, s.config)), true,
                     s.config.tau_db);

    // Top-200 agreement at 1e-8 (the acceptance-level check).
    double worst_top = 0.0;
    for (Eigen::Index i = 0; i < 200; ++i) {
        worst_top = std::max(worst_top, std::abs(sv.values(i) - ei.values(i)) / sv.values(i));
    }
    CHECK(worst_top < 1e-8);

    // Forming the Gram matrix squares the condition number, so float64 can
    // hold 1e-8 agreement only down to sigma/sigma0 ~ 1e-4.
    double worst_sig = 0.0;
    for (Eigen::Index i = 0; i < sv.size() && sv.values(i) / sv.values(0) > 1e-4; ++i) {
        worst_sig = std::max(worst_sig, std::abs(sv.values(i) - ei.values(i)) / sv.values(i));
    }
    CHECK(worst_sig < 1e-8);
}

TEST_CASE("weighted composition: general eigensolve agrees with the hermitian route") {
    // AA_w^dag is similar to a Hermitian PSD matrix (the weight is
    // nonnegative), so its spectrum is real; the zgeev route must agree with
    // the symmetric solver and flag nothing significant.
    const LiftedSetup s = build_lifted(41, 48, 12);
    const ComplexOperatorMatrix Aw = assemble_A_adjoint(s.A, true, s.config);
    const ComplexOperatorMatrix M = compose(s.A, Aw);

    const SpectrumResult general = eig_spectrum(M, false, s.config.tau_db);
    const SpectrumResult hermitian = eig_spectrum(M, true, s.config.tau_db);

    double worst = 0.0;
    for (Eigen::Index i = 0; i < 200; ++i) {
        worst = std::max(worst, std::abs(general.values(i) - hermitian.values(i)) /
                                    hermitian.values(0));
    }
    CHECK(worst < 1e-10);
    for (int idx : general.complex_eig_flags) CHECK(idx > 150);

    // The midpoint data grid has uniform weights, so the composed matrix is
    // itself Hermitian and the orchestration may use the symmetric solver.
    CHECK(is_hermitian(M.entries));
}

TEST_CASE("critical indices agree between svd and eig routes") {
    const LiftedSetup s = build_lifted(31, 64, 12);
    const SpectrumResult sv = svd_spectrum(s.A, -30.0);
    const SpectrumResult ei = eig_spectrum(
        compose(s.A, assemble_A_adjoint(s.A, false, s.config)), true, -30.0);
    CHECK(sv.critical_index == ei.critical_index);
}

}  // TEST_SUITE
