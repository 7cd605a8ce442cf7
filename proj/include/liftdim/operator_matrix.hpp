#pragma once

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "liftdim/grid.hpp"

namespace liftdim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Complex field samples on the flattened observation grid (axis2 = u fastest).
using FieldSamples = Eigen::VectorXcd;

/// Lifted unknown F(x, xbar) = J(x) J*(xbar) on the flattened source tensor
/// grid (xbar fastest). Length n_x^2.
using LiftedUnknown = Eigen::VectorXcd;

/// Row/column metadata for a discretized integral operator. An axis list of
/// size 1 is a plain 1D grid, size 2 a tensor grid flattened axis2-fastest.
struct GridMeta {
    std::vector<Grid1D> axes;
    std::string label;

    std::size_t size() const {
        std::size_t n = 1;
        for (const auto& g : axes) n *= g.size();
        return n;
    }
    /// Product quadrature weight of the flattened index.
    double weight(std::size_t flat_idx) const {
        double w = 1.0;
        std::size_t rem = flat_idx;
        for (std::size_t k = axes.size(); k-- > 0;) {
            w *= axes[k].weights[rem % axes[k].size()];
            rem /= axes[k].size();
        }
        return w;
    }
};

/// Dense discretization of an integral operator, rows indexed by the data
/// grid and columns by the source grid. When quadrature_absorbed is set the
/// column quadrature weights are folded into the entries, so applying the
/// operator is a plain matrix-vector product.
struct ComplexOperatorMatrix {
    Matrix entries;
    GridMeta row_grid;
    GridMeta col_grid;
    bool quadrature_absorbed = false;

    Eigen::Index rows() const { return entries.rows(); }
    Eigen::Index cols() const { return entries.cols(); }
};

}  // namespace liftdim
