#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace liftdim {

/// Raised when a configuration value violates an invariant. `field` names the
/// offending entry so the CLI can report it (exit code 2).
class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Raised when a dense solver fails or a computation produces non-finite
/// results (exit code 3 in the CLI).
class NumericalError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Problem geometry and discretization. All lengths are in wavelengths, so the
/// wavenumber is fixed at beta = 2*pi. u = sin(theta) is dimensionless.
struct ProblemConfig {
    double a = 10.0;        // half-width of the source strip [lambda]
    double u_max = 0.5;     // observation extent in u = sin(theta), (0, 1]
    double r_min = 25.0;    // radial observation bounds [lambda]
    double r_max = 100.0;
    int n_x = 121;          // source grid points per axis
    int n_u = 164;          // data grid points in u
    int n_s = 32;           // data grid points in s = r_max/r (and in r)
    double tau_db = -40.0;  // significance threshold, dB relative to the peak

    static constexpr double beta = 2.0 * std::numbers::pi;

    double s_max() const { return r_max / r_min; }

    /// Throws ConfigError naming the first violated field.
    void validate() const;
};

/// Closed-form data-space bound. m_u and m_s are the indices up to which the
/// two Slepian sequences stay significant; m_bar = m_u * m_s bounds the number
/// of significant singular values of the lifting operator.
struct BoundResult {
    double m_u = 0.0;
    double m_s = 0.0;
    double m_bar = 0.0;
    int m_u_ceil = 0;   // ceil after snapping to integer within 1e-9 relative
    int m_s_ceil = 0;
    int m_bar_ceil = 0;
};

/// m_u = (4/pi) beta a u_max + 1,  m_s = (beta a^2 / 2pi)(1/r_min - 1/r_max) + 1.
BoundResult compute_bounds(const ProblemConfig& config);

/// Non-fatal sanity warnings for the paraxial Fresnel model: r_min < 2a or
/// u_max > 0.7 strain the approximation. Never rejects.
std::vector<std::string> validate_fresnel_regime(const ProblemConfig& config);

/// ceil with a snap: values within 1e-9 relative of an integer count as that
/// integer first. Keeps the classic integer bounds stable under roundoff.
int snap_ceil(double value);

}  // namespace liftdim
