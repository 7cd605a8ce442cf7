#include "liftdim/slepian.hpp"

#include <algorithm>
#include <cmath>

#include "lapack_backend.hpp"
#include "liftdim/lifting_op.hpp"

namespace liftdim {

int SlepianSpectrum::count_above(double threshold) const {
    int count = 0;
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
        if (eigenvalues(i) > threshold) ++count;
    }
    return count;
}

SlepianSpectrum slepian_spectrum(double omega, double lo, double hi, int n) {
    if (!(omega > 0.0)) throw ConfigError("omega", "must be positive");
    if (!(lo < hi)) throw ConfigError("interval", "requires lo < hi");

    const double half_width = 0.5 * (hi - lo);
    const double shannon = 2.0 * omega * half_width / std::numbers::pi;
    if (n < 2.0 * shannon + 20.0) {
        throw ConfigError("n", "under-resolved: needs at least 2*shannon + 20 points");
    }

    const Grid1D grid = uniform_grid(lo, hi, n);
    // Midpoint weights are uniform, so the sqrt-weight similarity that makes
    // the Nystrom matrix symmetric is exact: K_sym = sqrt(w) K sqrt(w).
    RealMatrix K(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            K(i, j) = sinc(omega * (grid.nodes[static_cast<std::size_t>(i)] -
                                    grid.nodes[static_cast<std::size_t>(j)])) *
                      std::sqrt(grid.weights[static_cast<std::size_t>(i)] *
                                grid.weights[static_cast<std::size_t>(j)]);
        }
    }
    RealVector lam = backend::eigvalsh(K);

    SlepianSpectrum out;
    out.omega = omega;
    out.half_width = half_width;
    out.shannon = shannon;
    out.eigenvalues = (lam * (omega / std::numbers::pi)).reverse();
    return out;
}

SpectrumResult product_spectrum(const SlepianSpectrum& spec_u, const SlepianSpectrum& spec_s,
                                double scale, double tau_db) {
    if (spec_u.eigenvalues.size() == 0 || spec_s.eigenvalues.size() == 0) {
        throw std::invalid_argument("product_spectrum: empty factor spectrum");
    }
    SpectrumResult out;
    out.kind = SpectrumKind::product_closed_form;
    out.threshold_db = tau_db;
    out.values.resize(spec_u.eigenvalues.size() * spec_s.eigenvalues.size());
    Eigen::Index idx = 0;
    for (Eigen::Index i = 0; i < spec_s.eigenvalues.size(); ++i) {
        for (Eigen::Index j = 0; j < spec_u.eigenvalues.size(); ++j) {
            out.values(idx++) = scale * spec_s.eigenvalues(i) * spec_u.eigenvalues(j);
        }
    }
    std::sort(out.values.data(), out.values.data() + out.values.size(), std::greater<double>());
    out.critical_index = out.values(0) > 0.0 ? detect_critical_index(out.values, tau_db) : 1;
    return out;
}

}  // namespace liftdim
