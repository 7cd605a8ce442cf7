#pragma once

#include "liftdim/config.hpp"
#include "liftdim/operator_matrix.hpp"

namespace liftdim {

/// Discretized Fresnel radiation operator of a strip current:
///
///   (T J)(r, u) = (1/sqrt(beta r)) e^{-j beta r (1 + u^2/2)}
///                 * Int_{-a}^{a} e^{-j beta x^2 / (2r)} e^{j beta u x} J(x) dx
///
/// Rows run over the (r, u) tensor grid (u fastest), columns over the x grid.
/// The x quadrature weights are absorbed into the entries. The unimodular
/// prefactor is kept even though it cancels in |E|^2, so applying T matches
/// the integral form literally.
ComplexOperatorMatrix assemble_T(const ProblemConfig& config, const Grid1D& x_grid,
                                 const Grid1D& r_grid, const Grid1D& u_grid);

/// E = T J. Throws on length mismatch.
FieldSamples apply_T(const ComplexOperatorMatrix& T, const Vector& J);

/// |E|^2 = |T J|^2, elementwise. Real and nonnegative.
RealVector squared_field(const ComplexOperatorMatrix& T, const Vector& J);

}  // namespace liftdim
