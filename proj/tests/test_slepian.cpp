#include <doctest.h>

#include <cmath>

#include "liftdim/lifting_op.hpp"
#include "liftdim/slepian.hpp"

using namespace liftdim;

TEST_SUITE("slepian") {

TEST_CASE("u-axis operator of the standard case: Shannon number 40") {
    const double beta = ProblemConfig::beta;
    const SlepianSpectrum s = slepian_spectrum(2.0 * beta * 10.0, -0.5, 0.5, 164);
    CHECK(s.shannon == doctest::Approx(40.0).epsilon(1e-12));
    CHECK(s.half_width == doctest::Approx(0.5));
    CHECK(s.eigenvalues.size() == 164);

    const int above = s.count_above(0.5);
    CHECK(above >= 39);
    CHECK(above <= 41);

    // Plateau-plunge shape.
    CHECK(s.eigenvalues(0) > 0.99);
    CHECK(s.eigenvalues(45) / s.eigenvalues(0) < 1e-2);

    // Normalized eigenvalues live in (0, 1] up to roundoff, descending.
    CHECK(s.eigenvalues.minCoeff() > -1e-10);
    CHECK(s.eigenvalues.maxCoeff() < 1.0 + 1e-6);
    for (Eigen::Index i = 1; i < s.eigenvalues.size(); ++i) {
        CHECK(s.eigenvalues(i) <= s.eigenvalues(i - 1));
    }
    CHECK(s.eigenvalues.size() >= static_cast<Eigen::Index>(std::ceil(s.shannon)) + 10);
}

TEST_CASE("s-axis operator of the standard case: Shannon number 3") {
    const double beta = ProblemConfig::beta;
    const SlepianSpectrum s =
        slepian_spectrum(beta * 100.0 / (2.0 * 100.0), 1.0, 4.0, 32);  // omega = pi
    CHECK(s.omega == doctest::Approx(std::numbers::pi));
    CHECK(s.shannon == doctest::Approx(3.0).epsilon(1e-12));

    const int above = s.count_above(0.5);
    CHECK(above >= 2);
    CHECK(above <= 4);

    CHECK(s.eigenvalues(0) > 0.99);
    CHECK(s.eigenvalues(8) / s.eigenvalues(0) < 1e-2);
    CHECK(s.eigenvalues.minCoeff() > -1e-10);
    CHECK(s.eigenvalues.maxCoeff() < 1.0 + 1e-6);
}

TEST_CASE("count above one half tracks the Shannon number") {
    // Several bandwidths on one interval; the 0.5-crossing count stays
    // within one of round(2 omega T / pi).
    for (const double omega : {8.0, 20.0, 60.0}) {
        const SlepianSpectrum s = slepian_spectrum(omega, -1.0, 1.0, 128);
        const int expected = static_cast<int>(std::lround(s.shannon));
        CHECK(std::abs(s.count_above(0.5) - expected) <= 1);
    }
}

TEST_CASE("under-resolved discretizations are rejected") {
    const double beta = ProblemConfig::beta;
    // Shannon 40 needs at least 100 points.
    CHECK_THROWS_AS(slepian_spectrum(2.0 * beta * 10.0, -0.5, 0.5, 50), ConfigError);
    CHECK_THROWS_AS(slepian_spectrum(0.0, -0.5, 0.5, 64), ConfigError);
    CHECK_THROWS_AS(slepian_spectrum(1.0, 0.5, -0.5, 64), ConfigError);
}

TEST_CASE("leading eigenvalue collapses as the bandwidth shrinks") {
    double prev = 2.0;
    for (const double omega : {2.0, 1.0, 0.5, 0.25, 0.1}) {
        const SlepianSpectrum s = slepian_spectrum(omega, 0.0, 1.0, 64);
        CHECK(s.eigenvalues(0) < prev);
        prev = s.eigenvalues(0);
    }
    // In the omega -> 0 limit the normalized peak approaches (hi-lo) omega/pi.
    const SlepianSpectrum tiny = slepian_spectrum(1e-3, 0.0, 1.0, 64);
    CHECK(tiny.eigenvalues(0) ==
          doctest::Approx(1e-3 / std::numbers::pi).epsilon(1e-3));
}

TEST_CASE("product spectrum of singletons") {
    SlepianSpectrum u, s;
    u.omega = 1.0;
    u.eigenvalues = RealVector(2);
    u.eigenvalues << 1.0, 0.5;
    s.omega = 1.0;
    s.eigenvalues = RealVector(1);
    s.eigenvalues << 1.0;
    const SpectrumResult p = product_spectrum(u, s, 1.0, -40.0);
    REQUIRE(p.size() == 2);
    CHECK(p.values(0) == doctest::Approx(1.0));
    CHECK(p.values(1) == doctest::Approx(0.5));
    CHECK(p.kind == SpectrumKind::product_closed_form);
}

TEST_CASE("tensor-product exactness on a reduced grid") {
    // The discretized separable 2D kernel is the Kronecker product of the two
    // 1D Nystrom matrices, so its eigenvalues are exactly the pairwise
    // products of the 1D eigenvalues.
    ProblemConfig c;
    c.n_u = 110;
    c.n_s = 28;
    const double beta = ProblemConfig::beta;
    const double omega_u = 2.0 * beta * c.a;
    const double omega_s = beta * c.a * c.a / (2.0 * c.r_max);

    const SlepianSpectrum su = slepian_spectrum(omega_u, -c.u_max, c.u_max, c.n_u);
    const SlepianSpectrum ss = slepian_spectrum(omega_s, 1.0, c.s_max(), c.n_s);
    const double pref = 8.0 * std::pow(c.a, 3) / (beta * beta * c.r_max * c.r_max);
    const double scale = pref * (std::numbers::pi / omega_u) * (std::numbers::pi / omega_s);
    const SpectrumResult prod = product_spectrum(su, ss, scale, c.tau_db);

    const ComplexOperatorMatrix M = assemble_AAdag_approx(
        c, s_grid_from_r(c), uniform_grid(-c.u_max, c.u_max, c.n_u), true);
    const SpectrumResult eig = eig_spectrum(M, true, c.tau_db);

    double worst = 0.0;
    for (Eigen::Index i = 0; i < 200; ++i) {
        const double lam2d = eig.values(i) * eig.values(i);
        worst = std::max(worst, std::abs(lam2d - prod.values(i)) / prod.values(i));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("product spectrum rejects empty factors") {
    SlepianSpectrum empty, ok;
    ok.eigenvalues = RealVector::Ones(3);
    CHECK_THROWS_AS(product_spectrum(empty, ok, 1.0, -40.0), std::invalid_argument);
}

}  // TEST_SUITE
