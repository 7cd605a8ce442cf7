#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "liftdim/config.hpp"
#include "liftdim/operator_matrix.hpp"

namespace liftdim {

/// Lifting operator: the linear map taking F(x, xbar) to |E(r, u)|^2,
///
///   (A F)(r, u) = (1/(beta r)) Int_D e^{j beta (xbar^2 - x^2)/(2r)}
///                 e^{-j beta u (xbar - x)} F(x, xbar) dx dxbar .
///
/// Rows over the (r, u) tensor grid (u fastest), columns over the (x, xbar)
/// tensor grid (xbar fastest), both source quadrature weights absorbed.
ComplexOperatorMatrix assemble_A(const ProblemConfig& config, const TensorGrid2D& xx_grid,
                                 const Grid1D& r_grid, const Grid1D& u_grid);

/// Jacobian-canceling weight w(x, xbar) = 2 |xbar - x| / r_max.
/// The diagonal x = xbar is excluded (null set); throws on it.
double weight_function(double x, double xbar, double r_max);

/// Adjoint of an assembled lifting operator. The returned matrix maps data
/// samples to source-pair samples with the data quadrature weights absorbed:
///
///   unweighted:  Adag[kl, i] = conj(A[i, kl]) * W_i
///   weighted:    additionally scaled by w(x_k, xbar_l); coincident pairs
///                x_k = xbar_l get weight 0 (discrete removal of the null
///                set D2).
ComplexOperatorMatrix assemble_A_adjoint(const ComplexOperatorMatrix& A, bool weighted,
                                         const ProblemConfig& config);

/// AA^dag (or AA_w^dag) as an explicit product of the assembled matrices.
ComplexOperatorMatrix compose(const ComplexOperatorMatrix& A, const ComplexOperatorMatrix& Adag);

/// Change of variables X1 = xbar - x, X2 = (xbar^2 - x^2)/r_max. The image of
/// the diagonal x = xbar is the excluded point (0, 0), i.e. X1 == 0.
struct LiftedPoint {
    double x1 = 0.0;
    double x2 = 0.0;
    bool diagonal_image() const { return x1 == 0.0; }
};

LiftedPoint map_to_lifted(double x, double xbar, double r_max);

/// Scatter sample of the image domain D1-hat together with its enclosing
/// rectangle [-2a, 2a] x [-a^2/r_max, a^2/r_max].
struct LiftedDomainSample {
    std::vector<std::array<double, 2>> points;
    double x1_half_width = 0.0;  // 2a
    double x2_half_width = 0.0;  // a^2 / r_max
};

/// Images of a uniform lattice over D (diagonal pairs skipped) plus the two
/// extreme anti-diagonal corners (-a, a) -> (2a, 0) and (a, -a) -> (-2a, 0).
LiftedDomainSample sample_lifted_domain(const ProblemConfig& config, int n_samples);

/// Closed-form kernel of the rectangle-enclosure approximation:
///
///   H(r, r_o, u, u_o) ~= (8 a^3 / (beta^2 r_max)) (1/(r r_o))
///        sinc((beta a^2 / 2)(1/r_o - 1/r)) sinc(2 beta a (u_o - u))
///
/// with sinc(t) = sin(t)/t, sinc(0) = 1.
double approx_kernel_H(double r, double r_o, double u, double u_o, const ProblemConfig& config);

/// Discretization of the approximated operator on the (s, u) tensor grid
/// (u fastest), data quadrature weights absorbed. symmetrized=false keeps the
/// s_o/s factor (integral form in s), symmetrized=true drops it (the
/// similarity-transformed real symmetric form).
ComplexOperatorMatrix assemble_AAdag_approx(const ProblemConfig& config, const Grid1D& s_grid,
                                            const Grid1D& u_grid, bool symmetrized);

/// sin(t)/t with sinc(0) = 1.
double sinc(double t);

}  // namespace liftdim
