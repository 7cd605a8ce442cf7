#include <doctest.h>

#include <numeric>

#include "liftdim/grid.hpp"

using namespace liftdim;

namespace {

double weight_sum(const Grid1D& g) {
    return std::accumulate(g.weights.begin(), g.weights.end(), 0.0);
}

}  // namespace

TEST_SUITE("grid") {

TEST_CASE("midpoint rule on (0, 1, 2)") {
    const Grid1D g = uniform_grid(0.0, 1.0, 2);
    REQUIRE(g.size() == 2);
    CHECK(g.nodes[0] == doctest::Approx(0.25));
    CHECK(g.nodes[1] == doctest::Approx(0.75));
    CHECK(g.weights[0] == doctest::Approx(0.5));
    CHECK(g.weights[1] == doctest::Approx(0.5));
}

TEST_CASE("weight sum equals the interval length") {
    CHECK(weight_sum(uniform_grid(-1.0, 1.0, 4)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(weight_sum(uniform_grid(25.0, 100.0, 8)) == doctest::Approx(75.0).epsilon(1e-12));
    CHECK(weight_sum(uniform_grid(0.3, 17.9, 113)) == doctest::Approx(17.6).epsilon(1e-12));
}

TEST_CASE("nodes stay strictly inside the interval, ascending, even spacing") {
    const Grid1D g = uniform_grid(25.0, 100.0, 8);
    CHECK(g.nodes.front() > 25.0);
    CHECK(g.nodes.back() < 100.0);
    for (std::size_t k = 1; k < g.size(); ++k) {
        CHECK(g.nodes[k] > g.nodes[k - 1]);
        CHECK(g.nodes[k] - g.nodes[k - 1] == doctest::Approx(9.375));
    }
}

TEST_CASE("invalid intervals are rejected") {
    CHECK_THROWS_AS(uniform_grid(1.0, 1.0, 4), ConfigError);
    CHECK_THROWS_AS(uniform_grid(2.0, 1.0, 4), ConfigError);
    CHECK_THROWS_AS(uniform_grid(0.0, 1.0, 1), ConfigError);
}

TEST_CASE("refinement doubles nodes and halves weights, sum invariant") {
    const Grid1D coarse = uniform_grid(-3.0, 5.0, 10);
    const Grid1D fine = uniform_grid(-3.0, 5.0, 20);
    CHECK(fine.size() == 2 * coarse.size());
    CHECK(fine.weights[0] == doctest::Approx(0.5 * coarse.weights[0]));
    CHECK(weight_sum(fine) == doctest::Approx(weight_sum(coarse)).epsilon(1e-12));
}

TEST_CASE("s grid spans [1, r_max/r_min], ratio only") {
    ProblemConfig c;
    c.r_min = 25.0;
    c.r_max = 100.0;
    c.n_s = 4;
    Grid1D g = s_grid_from_r(c);
    CHECK(g.lo == 1.0);
    CHECK(g.hi == doctest::Approx(4.0));
    CHECK(g.size() == 4);

    c.r_min = 50.0;
    c.r_max = 200.0;
    c.n_s = 6;
    g = s_grid_from_r(c);
    CHECK(g.hi == doctest::Approx(4.0));
    CHECK(g.size() == 6);

    c.r_min = c.r_max;  // degenerate radii rejected by config validation
    CHECK_THROWS_AS(s_grid_from_r(c), ConfigError);
}

TEST_CASE("tensor grid flattening is axis2-fastest with product weights") {
    const TensorGrid2D t{uniform_grid(0.0, 1.0, 3), uniform_grid(0.0, 2.0, 4)};
    CHECK(t.size() == 12);
    CHECK(t.flat(1, 2) == 6);
    CHECK(t.node1(6) == doctest::Approx(t.axis1.nodes[1]));
    CHECK(t.node2(6) == doctest::Approx(t.axis2.nodes[2]));
    CHECK(t.weight(6) == doctest::Approx(t.axis1.weights[1] * t.axis2.weights[2]));
}

}  // TEST_SUITE
