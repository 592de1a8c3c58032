#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace wigner {

//! Smallest sample count accepted along either axis.
inline constexpr std::size_t kMinGridSamples = 16;

/*!
 * Uniform rectangular sampling of the (z, t) plane, or of (q_z, q_0) when
 * used for momentum-energy fields. Endpoints are included.
 */
class GridSpec
{
  public:
    GridSpec(double z_min, double z_max, std::size_t n_z, double t_min, double t_max,
             std::size_t n_t)
        : z_min_(z_min), z_max_(z_max), t_min_(t_min), t_max_(t_max), n_z_(n_z), n_t_(n_t)
    {
        if (!(std::isfinite(z_min) && std::isfinite(z_max) && std::isfinite(t_min)
              && std::isfinite(t_max))) {
            throw std::invalid_argument("GridSpec: bounds must be finite");
        }
        if (!(z_min < z_max) || !(t_min < t_max)) {
            throw std::invalid_argument("GridSpec: bounds must be strictly ordered");
        }
        if (n_z < kMinGridSamples || n_t < kMinGridSamples) {
            throw std::invalid_argument("GridSpec: need at least "
                                        + std::to_string(kMinGridSamples)
                                        + " samples per axis");
        }
    }

    //! Square grid [-half_width, half_width]^2.
    static GridSpec symmetric(double half_width, std::size_t n)
    {
        return GridSpec(-half_width, half_width, n, -half_width, half_width, n);
    }

    double z_min() const { return z_min_; }
    double z_max() const { return z_max_; }
    double t_min() const { return t_min_; }
    double t_max() const { return t_max_; }
    std::size_t n_z() const { return n_z_; }
    std::size_t n_t() const { return n_t_; }
    std::size_t size() const { return n_z_ * n_t_; }

    double dz() const { return (z_max_ - z_min_) / static_cast<double>(n_z_ - 1); }
    double dt() const { return (t_max_ - t_min_) / static_cast<double>(n_t_ - 1); }
    double z(std::size_t i) const { return z_min_ + static_cast<double>(i) * dz(); }
    double t(std::size_t j) const { return t_min_ + static_cast<double>(j) * dt(); }

    //! z-major flat index.
    std::size_t index(std::size_t i, std::size_t j) const { return i * n_t_ + j; }

    //! Trapezoid weights along z and t.
    double weight_z(std::size_t i) const
    {
        return (i == 0 || i + 1 == n_z_) ? 0.5 * dz() : dz();
    }
    double weight_t(std::size_t j) const
    {
        return (j == 0 || j + 1 == n_t_) ? 0.5 * dt() : dt();
    }

    //! Smallest distance from the origin to any edge.
    double inner_half_width() const
    {
        return std::min({-z_min_, z_max_, -t_min_, t_max_});
    }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;

  private:
    double z_min_, z_max_, t_min_, t_max_;
    std::size_t n_z_, n_t_;
};

enum class Representation { space_time, momentum_energy };

struct OscillatorState {
    int n{0};
    double eta{0};

    OscillatorState() = default;
    OscillatorState(int n_, double eta_) : n(n_), eta(eta_)
    {
        if (n < 0) {
            throw std::invalid_argument("OscillatorState: n must be >= 0");
        }
        if (!std::isfinite(eta)) {
            throw std::invalid_argument("OscillatorState: eta must be finite");
        }
    }
};

/*!
 * Wave function samples on a grid, z-major.
 *
 * Space-time fields are real; momentum-energy fields from the numeric
 * transform are complex. tail_warning is set when the grid did not pass the
 * tail-coverage guard.
 */
struct ScalarField {
    GridSpec grid;
    OscillatorState state;
    Representation representation;
    std::variant<std::vector<double>, std::vector<std::complex<double>>> values;
    bool tail_warning{false};

    bool is_complex() const
    {
        return std::holds_alternative<std::vector<std::complex<double>>>(values);
    }
    const std::vector<double>& real() const { return std::get<std::vector<double>>(values); }
    const std::vector<std::complex<double>>& complex_values() const
    {
        return std::get<std::vector<std::complex<double>>>(values);
    }

    //! |value| at flat index k, regardless of storage.
    double modulus(std::size_t k) const
    {
        return is_complex() ? std::abs(complex_values()[k]) : std::abs(real()[k]);
    }
};

/// Trapezoidal integral of a sampled function f(i, j) over the grid.
template <typename F>
double integrate(const GridSpec& grid, F&& f)
{
    double total = 0;
    for (std::size_t i = 0; i < grid.n_z(); ++i) {
        double row = 0;
        for (std::size_t j = 0; j < grid.n_t(); ++j) {
            row += grid.weight_t(j) * f(i, j);
        }
        total += grid.weight_z(i) * row;
    }
    return total;
}

//! Integral of |field|^2.
inline double norm_squared(const ScalarField& field)
{
    return integrate(field.grid, [&](std::size_t i, std::size_t j) {
        const double m = field.modulus(field.grid.index(i, j));
        return m * m;
    });
}

}  // namespace wigner
