#pragma once

#include "liftdim/config.hpp"
#include "liftdim/operator_matrix.hpp"
#include "liftdim/spectra.hpp"

namespace liftdim {

/// Eigenvalues of a Slepian-Pollak operator with kernel sinc(omega (t - t'))
/// on [lo, hi]. Normalized by omega/pi so the plateau sits at 1; the Shannon
/// number 2 omega T / pi (T the interval half-length) counts the near-unity
/// eigenvalues before the plunge.
struct SlepianSpectrum {
    double omega = 0.0;
    double half_width = 0.0;
    double shannon = 0.0;
    RealVector eigenvalues;  // normalized, descending

    int count_above(double threshold) const;
};

/// Nystrom discretization on an n-point midpoint grid, symmetrized with
/// sqrt-weights, dense eigensolve. Requires n >= 2*shannon + 20 so the
/// plunge region is resolved; throws ConfigError("n") otherwise.
SlepianSpectrum slepian_spectrum(double omega, double lo, double hi, int n);

/// All pairwise products of two Slepian spectra, scaled and sorted
/// descending. With scale = prefactor * (pi/omega_u) * (pi/omega_s) the
/// products reproduce the eigenvalues of the separable 2D operator whose
/// kernel is the product of the two sinc kernels.
SpectrumResult product_spectrum(const SlepianSpectrum& spec_u, const SlepianSpectrum& spec_s,
                                double scale, double tau_db);

}  // namespace liftdim
