#include "liftdim/config.hpp"

#include <cmath>

namespace liftdim {

void ProblemConfig::validate() const {
    if (!(a > 0.0) || !std::isfinite(a)) throw ConfigError("a", "must be positive and finite");
    if (!(u_max > 0.0) || u_max > 1.0) throw ConfigError("u_max", "must lie in (0, 1]");
    if (!(r_min > 0.0) || !std::isfinite(r_min)) throw ConfigError("r_min", "must be positive");
    if (!(r_max > r_min)) throw ConfigError("r_max", "must exceed r_min");
    if (!std::isfinite(r_max)) throw ConfigError("r_max", "must be finite");
    if (n_x < 2) throw ConfigError("n_x", "needs at least 2 points");
    if (n_u < 2) throw ConfigError("n_u", "needs at least 2 points");
    if (n_s < 2) throw ConfigError("n_s", "needs at least 2 points");
    if (!(tau_db < 0.0)) throw ConfigError("tau_db", "must be negative (dB below the peak)");
}

int snap_ceil(double value) {
    const double nearest = std::round(value);
    if (std::abs(value - nearest) <= 1e-9 * std::max(1.0, std::abs(value))) {
        return static_cast<int>(nearest);
    }
    return static_cast<int>(std::ceil(value));
}

BoundResult compute_bounds(const ProblemConfig& config) {
    config.validate();
    const double beta = ProblemConfig::beta;
    BoundResult out;
    out.m_u = (4.0 / std::numbers::pi) * beta * config.a * config.u_max + 1.0;
    out.m_s = (beta * config.a * config.a / (2.0 * std::numbers::pi)) *
                  (1.0 / config.r_min - 1.0 / config.r_max) +
              1.0;
    out.m_bar = out.m_u * out.m_s;
    out.m_u_ceil = snap_ceil(out.m_u);
    out.m_s_ceil = snap_ceil(out.m_s);
    out.m_bar_ceil = snap_ceil(out.m_bar);
    return out;
}

std::vector<std::string> validate_fresnel_regime(const ProblemConfig& config) {
    config.validate();
    std::vector<std::string> warnings;
    if (config.r_min < 2.0 * config.a) {
        warnings.push_back("fresnel: r_min < 2a, paraxial Fresnel approximation questionable");
    }
    if (config.u_max > 0.7) {
        warnings.push_back("paraxial: u_max > 0.7 strains the paraxial approximation");
    }
    return warnings;
}

}  // namespace liftdim
