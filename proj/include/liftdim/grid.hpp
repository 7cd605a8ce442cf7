#pragma once

#include <cstddef>
#include <vector>

#include "liftdim/config.hpp"

namespace liftdim {

/// 1D quadrature grid: strictly ascending nodes with positive weights on
/// [lo, hi]. Midpoint grids never contain the interval endpoints.
struct Grid1D {
    std::vector<double> nodes;
    std::vector<double> weights;
    double lo = 0.0;
    double hi = 0.0;

    std::size_t size() const { return nodes.size(); }
};

/// Midpoint rule: nodes at lo + (k + 1/2) h, h = (hi - lo)/n, all weights h.
Grid1D uniform_grid(double lo, double hi, int n);

/// Uniform midpoint grid on [1, r_max/r_min] for the s = r_max/r variable.
Grid1D s_grid_from_r(const ProblemConfig& config);

/// Tensor product of two 1D grids, flattened with axis2 fastest:
/// flat index = i1 * axis2.size() + i2.
struct TensorGrid2D {
    Grid1D axis1;
    Grid1D axis2;

    std::size_t size() const { return axis1.size() * axis2.size(); }
    std::size_t flat(std::size_t i1, std::size_t i2) const { return i1 * axis2.size() + i2; }
    double node1(std::size_t flat_idx) const { return axis1.nodes[flat_idx / axis2.size()]; }
    double node2(std::size_t flat_idx) const { return axis2.nodes[flat_idx % axis2.size()]; }
    double weight(std::size_t flat_idx) const {
        return axis1.weights[flat_idx / axis2.size()] * axis2.weights[flat_idx % axis2.size()];
    }
};

}  // namespace liftdim
