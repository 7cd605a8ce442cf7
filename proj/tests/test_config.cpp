#include <doctest.h>

#include "liftdim/config.hpp"

using namespace liftdim;

namespace {

ProblemConfig standard_case() {
    ProblemConfig c;
    c.a = 10.0;
    c.u_max = 0.5;
    c.r_min = 25.0;
    c.r_max = 100.0;
    return c;
}

}  // namespace

TEST_SUITE("config") {

TEST_CASE("standard test case reproduces M_u=41 M_s=4 M_bar=164") {
    const BoundResult b = compute_bounds(standard_case());
    CHECK(b.m_u_ceil == 41);
    CHECK(b.m_s_ceil == 4);
    CHECK(b.m_bar_ceil == 164);
    CHECK(b.m_u == doctest::Approx(41.0).epsilon(1e-12));
    CHECK(b.m_s == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(b.m_bar == doctest::Approx(164.0).epsilon(1e-12));
}

TEST_CASE("m_u tends to 1 as u_max tends to 0") {
    ProblemConfig c = standard_case();
    c.u_max = 1e-12;
    const BoundResult b = compute_bounds(c);
    CHECK(b.m_u > 1.0);
    CHECK(b.m_u < 1.0 + 1e-9);
}

TEST_CASE("m_s tends to 1 as r_min approaches r_max") {
    ProblemConfig c = standard_case();
    c.r_min = c.r_max * (1.0 - 1e-12);
    const BoundResult b = compute_bounds(c);
    CHECK(b.m_s > 1.0);
    CHECK(b.m_s < 1.0 + 1e-9);
}

TEST_CASE("m_bar equals the product of the factors") {
    ProblemConfig c = standard_case();
    c.a = 7.3;
    c.u_max = 0.41;
    c.r_min = 18.0;
    c.r_max = 230.0;
    const BoundResult b = compute_bounds(c);
    CHECK(b.m_bar == b.m_u * b.m_s);
    CHECK(b.m_u >= 1.0);
    CHECK(b.m_s >= 1.0);
}

TEST_CASE("bounds are monotone in a, u_max and the 1/r spread") {
    const BoundResult base = compute_bounds(standard_case());

    ProblemConfig c = standard_case();
    c.a = 12.0;
    BoundResult b = compute_bounds(c);
    CHECK(b.m_u >= base.m_u);
    CHECK(b.m_s >= base.m_s);
    CHECK(b.m_bar >= base.m_bar);

    c = standard_case();
    c.u_max = 0.8;
    b = compute_bounds(c);
    CHECK(b.m_u >= base.m_u);
    CHECK(b.m_bar >= base.m_bar);

    c = standard_case();
    c.r_min = 20.0;  // widens 1/r_min - 1/r_max
    b = compute_bounds(c);
    CHECK(b.m_s >= base.m_s);
    CHECK(b.m_bar >= base.m_bar);
}

TEST_CASE("scaling structure of the closed forms") {
    const double kappa = 3.0;
    const BoundResult base = compute_bounds(standard_case());

    // m_u - 1 scales linearly with a; m_s - 1 with a^2 at fixed radii.
    ProblemConfig c = standard_case();
    c.a *= kappa;
    const BoundResult am = compute_bounds(c);
    CHECK((am.m_u - 1.0) == doctest::Approx(kappa * (base.m_u - 1.0)).epsilon(1e-12));
    CHECK((am.m_s - 1.0) == doctest::Approx(kappa * kappa * (base.m_s - 1.0)).epsilon(1e-12));

    // Joint rescale of (a, r_min, r_max) by kappa: both m_u - 1 and m_s - 1
    // scale by kappa (a^2 * (1/r) contributes kappa^2 / kappa).
    c = standard_case();
    c.a *= kappa;
    c.r_min *= kappa;
    c.r_max *= kappa;
    const BoundResult jm = compute_bounds(c);
    CHECK((jm.m_u - 1.0) == doctest::Approx(kappa * (base.m_u - 1.0)).epsilon(1e-12));
    CHECK((jm.m_s - 1.0) == doctest::Approx(kappa * (base.m_s - 1.0)).epsilon(1e-12));
}

TEST_CASE("validation names the offending field") {
    ProblemConfig c = standard_case();
    c.a = -1.0;
    CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("a:"), ConfigError);

    c = standard_case();
    c.u_max = 0.0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.u_max = 1.5;
    CHECK_THROWS_AS(c.validate(), ConfigError);

    c = standard_case();
    c.r_min = 100.0;
    c.r_max = 25.0;
    CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("r_max"), ConfigError);

    c = standard_case();
    c.r_min = c.r_max;  // degenerate interval
    CHECK_THROWS_AS(c.validate(), ConfigError);

    c = standard_case();
    c.n_x = 1;
    CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("n_x"), ConfigError);

    c = standard_case();
    c.tau_db = 0.0;
    CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("tau_db"), ConfigError);

    CHECK_THROWS_AS(compute_bounds(c), ConfigError);
}

TEST_CASE("fresnel regime warnings") {
    CHECK(validate_fresnel_regime(standard_case()).empty());

    ProblemConfig c = standard_case();
    c.r_min = 5.0;
    auto w = validate_fresnel_regime(c);
    REQUIRE(w.size() == 1);
    CHECK(w[0].find("fresnel") != std::string::npos);

    c = standard_case();
    c.u_max = 0.9;
    w = validate_fresnel_regime(c);
    REQUIRE(w.size() == 1);
    CHECK(w[0].find("paraxial") != std::string::npos);

    c.r_min = 5.0;
    CHECK(validate_fresnel_regime(c).size() == 2);
}

TEST_CASE("snap_ceil rounds roundoff-level near-integers, ceils otherwise") {
    CHECK(snap_ceil(41.0) == 41);
    CHECK(snap_ceil(40.99999999999999) == 41);
    CHECK(snap_ceil(41.00000000000001) == 41);
    CHECK(snap_ceil(41.0001) == 42);
    CHECK(snap_ceil(3.2) == 4);
    CHECK(snap_ceil(-1.5) == -1);
}

}  // TEST_SUITE
