#include "liftdim/grid.hpp"

#include <cmath>

namespace liftdim {

Grid1D uniform_grid(double lo, double hi, int n) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw ConfigError("interval", "requires finite lo < hi");
    }
    if (n < 2) throw ConfigError("n", "needs at least 2 points");
    Grid1D g;
    g.lo = lo;
    g.hi = hi;
    g.nodes.resize(static_cast<std::size_t>(n));
    g.weights.assign(static_cast<std::size_t>(n), (hi - lo) / n);
    const double h = (hi - lo) / n;
    for (int k = 0; k < n; ++k) g.nodes[static_cast<std::size_t>(k)] = lo + (k + 0.5) * h;
    return g;
}

Grid1D s_grid_from_r(const ProblemConfig& config) {
    config.validate();
    return uniform_grid(1.0, config.s_max(), config.n_s);
}

}  // namespace liftdim
