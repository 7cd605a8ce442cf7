#include "liftdim/lifting_op.hpp"

#include <cmath>

#include "lapack_backend.hpp"

namespace liftdim {

double sinc(double t) {
    if (std::abs(t) < 1e-8) return 1.0;
    return std::sin(t) / t;
}

ComplexOperatorMatrix assemble_A(const ProblemConfig& config, const TensorGrid2D& xx_grid,
                                 const Grid1D& r_grid, const Grid1D& u_grid) {
    config.validate();
    const double beta = ProblemConfig::beta;
    const auto n_r = static_cast<Eigen::Index>(r_grid.size());
    const auto n_u = static_cast<Eigen::Index>(u_grid.size());
    const auto n_x = static_cast<Eigen::Index>(xx_grid.axis1.size());
    const auto n_xb = static_cast<Eigen::Index>(xx_grid.axis2.size());

    ComplexOperatorMatrix A;
    A.entries.resize(n_r * n_u, n_x * n_xb);
    A.row_grid = GridMeta{{r_grid, u_grid}, "r x u"};
    A.col_grid = GridMeta{{xx_grid.axis1, xx_grid.axis2}, "x x xbar"};
    A.quadrature_absorbed = true;

    // Entry = (1/(beta r)) tau(x_k) conj(tau(xbar_l)) with
    // tau(x) = e^{-j beta x^2/(2r)} e^{j beta u x} w(x): the kernel of A is
    // the T-integrand at x times its conjugate at xbar. Precomputing the two
    // tau matrices (n_data x n_x) keeps assembly at one complex multiply per
    // entry, written column-contiguously.
    const Complex j(0.0, 1.0);
    Matrix tau1(n_r * n_u, n_x), tau2(n_r * n_u, n_xb);
#pragma omp parallel for collapse(2) schedule(static)
    for (Eigen::Index ir = 0; ir < n_r; ++ir) {
        for (Eigen::Index iu = 0; iu < n_u; ++iu) {
            const double r = r_grid.nodes[static_cast<std::size_t>(ir)];
            const double u = u_grid.nodes[static_cast<std::size_t>(iu)];
            const double inv_br = 1.0 / (beta * r);
            const Eigen::Index row = ir * n_u + iu;
            for (Eigen::Index k = 0; k < n_x; ++k) {
                const double x = xx_grid.axis1.nodes[static_cast<std::size_t>(k)];
                tau1(row, k) = std::exp(j * (beta * u * x - beta * x * x / (2.0 * r))) *
                               (xx_grid.axis1.weights[static_cast<std::size_t>(k)] * inv_br);
            }
            for (Eigen::Index l = 0; l < n_xb; ++l) {
                const double xb = xx_grid.axis2.nodes[static_cast<std::size_t>(l)];
                tau2(row, l) = std::exp(j * (beta * u * xb - beta * xb * xb / (2.0 * r))) *
                               xx_grid.axis2.weights[static_cast<std::size_t>(l)];
            }
        }
    }
#pragma omp parallel for collapse(2) schedule(static)
    for (Eigen::Index k = 0; k < n_x; ++k) {
        for (Eigen::Index l = 0; l < n_xb; ++l) {
            A.entries.col(k * n_xb + l) = tau1.col(k).cwiseProduct(tau2.col(l).conjugate());
        }
    }
    return A;
}

double weight_function(double x, double xbar, double r_max) {
    if (x == xbar) {
        throw std::domain_error("weight_function: diagonal point x == xbar is excluded");
    }
    return 2.0 * std::abs(xbar - x) / r_max;
}

ComplexOperatorMatrix assemble_A_adjoint(const ComplexOperatorMatrix& A, bool weighted,
                                         const ProblemConfig& config) {
    config.validate();
    const auto n_data = A.rows();
    const auto n_src = A.cols();

    ComplexOperatorMatrix Adag;
    Adag.entries.resize(n_src, n_data);
    Adag.row_grid = A.col_grid;
    Adag.col_grid = A.row_grid;
    Adag.quadrature_absorbed = true;

    RealVector row_scale = RealVector::Ones(n_src);
    if (weighted) {
        const auto& xs = A.col_grid.axes.at(0);
        const auto& xbs = A.col_grid.axes.at(1);
        const auto n_xb = static_cast<Eigen::Index>(xbs.size());
        for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(xs.size()); ++k) {
            for (Eigen::Index l = 0; l < n_xb; ++l) {
                const double x = xs.nodes[static_cast<std::size_t>(k)];
                const double xb = xbs.nodes[static_cast<std::size_t>(l)];
                row_scale(k * n_xb + l) =
                    (x == xb) ? 0.0 : weight_function(x, xb, config.r_max);
            }
        }
    }

    // Tiled adjoint keeps the big transpose cache-friendly, then one
    // contiguous pass per column applies the data weight and the row scale.
    constexpr Eigen::Index kTile = 256;
#pragma omp parallel for schedule(static)
    for (Eigen::Index j0 = 0; j0 < n_data; j0 += kTile) {
        const Eigen::Index w = std::min(kTile, n_data - j0);
        Adag.entries.middleCols(j0, w) = A.entries.middleRows(j0, w).adjoint();
    }
#pragma omp parallel for schedule(static)
    for (Eigen::Index i = 0; i < n_data; ++i) {
        const double wd = A.row_grid.weight(static_cast<std::size_t>(i));
        Adag.entries.col(i).array() *= row_scale.array() * wd;
    }
    return Adag;
}

ComplexOperatorMatrix compose(const ComplexOperatorMatrix& A, const ComplexOperatorMatrix& Adag) {
    if (A.cols() != Adag.rows()) {
        throw std::invalid_argument("compose: inner dimensions do not match");
    }
    ComplexOperatorMatrix M;
    M.entries = backend::matmul(A.entries, Adag.entries);
    M.row_grid = A.row_grid;
    M.col_grid = Adag.col_grid;
    M.quadrature_absorbed = true;
    return M;
}

LiftedPoint map_to_lifted(double x, double xbar, double r_max) {
    return LiftedPoint{xbar - x, (xbar * xbar - x * x) / r_max};
}

LiftedDomainSample sample_lifted_domain(const ProblemConfig& config, int n_samples) {
    config.validate();
    if (n_samples < 1) throw ConfigError("n_samples", "needs at least 1 sample");

    LiftedDomainSample out;
    out.x1_half_width = 2.0 * config.a;
    out.x2_half_width = config.a * config.a / config.r_max;

    // Extreme anti-diagonal corners of D map to the X1 extremes of the box.
    out.points.push_back({out.x1_half_width, 0.0});
    out.points.push_back({-out.x1_half_width, 0.0});

    const int m = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n_samples))));
    if (m >= 2) {
        const Grid1D lattice = uniform_grid(-config.a, config.a, m);
        for (std::size_t k = 0; k < lattice.size(); ++k) {
            for (std::size_t l = 0; l < lattice.size(); ++l) {
                if (k == l) continue;  // diagonal of D maps to the excluded (0, 0)
                const LiftedPoint p =
                    map_to_lifted(lattice.nodes[k], lattice.nodes[l], config.r_max);
                out.points.push_back({p.x1, p.x2});
            }
        }
    }
    return out;
}

double approx_kernel_H(double r, double r_o, double u, double u_o, const ProblemConfig& config) {
    const double beta = ProblemConfig::beta;
    const double a = config.a;
    const double pref = 8.0 * a * a * a / (beta * beta * config.r_max) / (r * r_o);
    return pref * sinc(0.5 * beta * a * a * (1.0 / r_o - 1.0 / r)) *
           sinc(2.0 * beta * a * (u_o - u));
}

ComplexOperatorMatrix assemble_AAdag_approx(const ProblemConfig& config, const Grid1D& s_grid,
                                            const Grid1D& u_grid, bool symmetrized) {
    config.validate();
    const double beta = ProblemConfig::beta;
    const double a = config.a;
    const double omega_s = beta * a * a / (2.0 * config.r_max);
    const double omega_u = 2.0 * beta * a;
    const double pref = 8.0 * a * a * a / (beta * beta * config.r_max * config.r_max);

    const auto n_s = static_cast<Eigen::Index>(s_grid.size());
    const auto n_u = static_cast<Eigen::Index>(u_grid.size());

    ComplexOperatorMatrix M;
    M.entries.resize(n_s * n_u, n_s * n_u);
    M.row_grid = GridMeta{{s_grid, u_grid}, "s x u"};
    M.col_grid = M.row_grid;
    M.quadrature_absorbed = true;

    RealMatrix ker_s(n_s, n_s), ker_u(n_u, n_u);
    for (Eigen::Index i = 0; i < n_s; ++i) {
        for (Eigen::Index k = 0; k < n_s; ++k) {
            ker_s(i, k) = sinc(omega_s * (s_grid.nodes[static_cast<std::size_t>(i)] -
                                          s_grid.nodes[static_cast<std::size_t>(k)]));
        }
    }
    for (Eigen::Index i = 0; i < n_u; ++i) {
        for (Eigen::Index k = 0; k < n_u; ++k) {
            ker_u(i, k) = sinc(omega_u * (u_grid.nodes[static_cast<std::size_t>(i)] -
                                          u_grid.nodes[static_cast<std::size_t>(k)]));
        }
    }

    // Separable kernel: column (is, iu) holds pref * ratio * ker_s(:, is)
    // (x) ker_u(:, iu) * w_s w_u, written column-contiguously.
#pragma omp parallel for collapse(2) schedule(static)
    for (Eigen::Index is = 0; is < n_s; ++is) {
        for (Eigen::Index iu = 0; iu < n_u; ++iu) {
            const double wsu = pref * s_grid.weights[static_cast<std::size_t>(is)] *
                               u_grid.weights[static_cast<std::size_t>(iu)];
            const Eigen::Index col = is * n_u + iu;
            for (Eigen::Index os = 0; os < n_s; ++os) {
                const double ratio =
                    symmetrized ? 1.0
                                : s_grid.nodes[static_cast<std::size_t>(os)] /
                                      s_grid.nodes[static_cast<std::size_t>(is)];
                const double a_s = wsu * ratio * ker_s(os, is);
                M.entries.block(os * n_u, col, n_u, 1).real() = a_s * ker_u.col(iu);
                M.entries.block(os * n_u, col, n_u, 1).imag().setZero();
            }
        }
    }
    return M;
}

}  // namespace liftdim
