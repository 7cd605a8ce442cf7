#include "liftdim/forward_op.hpp"

#include <cmath>

namespace liftdim {

ComplexOperatorMatrix assemble_T(const ProblemConfig& config, const Grid1D& x_grid,
                                 const Grid1D& r_grid, const Grid1D& u_grid) {
    config.validate();
    const double beta = ProblemConfig::beta;
    const auto n_r = static_cast<Eigen::Index>(r_grid.size());
    const auto n_u = static_cast<Eigen::Index>(u_grid.size());
    const auto n_x = static_cast<Eigen::Index>(x_grid.size());

    ComplexOperatorMatrix T;
    T.entries.resize(n_r * n_u, n_x);
    T.row_grid = GridMeta{{r_grid, u_grid}, "r x u"};
    T.col_grid = GridMeta{{x_grid}, "x"};
    T.quadrature_absorbed = true;

    const Complex j(0.0, 1.0);
#pragma omp parallel for collapse(2) schedule(static)
    for (Eigen::Index ir = 0; ir < n_r; ++ir) {
        for (Eigen::Index iu = 0; iu < n_u; ++iu) {
            const double r = r_grid.nodes[static_cast<std::size_t>(ir)];
            const double u = u_grid.nodes[static_cast<std::size_t>(iu)];
            const Complex pref =
                std::exp(-j * beta * r * (1.0 + 0.5 * u * u)) / std::sqrt(beta * r);
            const Eigen::Index row = ir * n_u + iu;
            for (Eigen::Index k = 0; k < n_x; ++k) {
                const double x = x_grid.nodes[static_cast<std::size_t>(k)];
                const double w = x_grid.weights[static_cast<std::size_t>(k)];
                T.entries(row, k) =
                    pref * std::exp(j * (beta * u * x - beta * x * x / (2.0 * r))) * w;
            }
        }
    }
    return T;
}

FieldSamples apply_T(const ComplexOperatorMatrix& T, const Vector& J) {
    if (J.size() != T.cols()) {
        throw std::invalid_argument("apply_T: source vector length does not match the x grid");
    }
    return T.entries * J;
}

RealVector squared_field(const ComplexOperatorMatrix& T, const Vector& J) {
    return apply_T(T, J).cwiseAbs2();
}

}  // namespace liftdim
