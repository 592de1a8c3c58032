#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wigner/four_vector.hpp"
#include "wigner/grid.hpp"

namespace wigner {

//---------------------------------------------------------------------------//
// KINEMATICS
//---------------------------------------------------------------------------//
struct QuarkPairCoordinates {
    FourVector x_a;
    FourVector x_b;
};

//! Hadron position and internal separation of a two-quark system.
struct RelativeCoordinates {
    FourVector center;
    FourVector separation;
};

inline RelativeCoordinates relative_coordinates(const QuarkPairCoordinates& pair)
{
    return {(pair.x_a + pair.x_b) / 2.0,
            (pair.x_a - pair.x_b) / (2.0 * std::numbers::sqrt2)};
}

struct LightConePoint {
    double u{0};
    double v{0};
};

inline LightConePoint lightcone(double z, double t)
{
    return {(z + t) / std::numbers::sqrt2, (z - t) / std::numbers::sqrt2};
}

//! Inverse of lightcone(): returns (z, t).
inline std::pair<double, double> space_time(const LightConePoint& p)
{
    return {(p.u + p.v) / std::numbers::sqrt2, (p.u - p.v) / std::numbers::sqrt2};
}

//! A z-boost is diagonal on the light cone: u -> e^eta u, v -> e^-eta v.
inline LightConePoint boost_lightcone(double eta, const LightConePoint& p)
{
    return {std::exp(eta) * p.u, std::exp(-eta) * p.v};
}

//---------------------------------------------------------------------------//
// WAVE FUNCTIONS
//---------------------------------------------------------------------------//
inline constexpr int kMaxHermiteDegree = 30;

/// Physicists' Hermite polynomial H_n(x), by upward recurrence.
inline double hermite(int n, double x)
{
    if (n < 0 || n > kMaxHermiteDegree) {
        throw std::invalid_argument("hermite: degree must be in [0, "
                                    + std::to_string(kMaxHermiteDegree) + "]");
    }
    double prev = 1.0;
    if (n == 0) {
        return prev;
    }
    double cur = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

//! (1 / (pi n! 2^n))^{1/2}, the prefactor of the (z, t) oscillator state.
inline double oscillator_prefactor(int n)
{
    const double log_norm = std::log(std::numbers::pi) + std::lgamma(n + 1.0)
                            + n * std::numbers::ln2;
    return std::exp(-0.5 * log_norm);
}

//! Normalized one-dimensional oscillator eigenfunction.
inline double oscillator_1d(int n, double z)
{
    const double log_norm = 0.5 * std::log(std::numbers::pi) + std::lgamma(n + 1.0)
                            + n * std::numbers::ln2;
    return std::exp(-0.5 * log_norm) * hermite(n, z) * std::exp(-0.5 * z * z);
}

/*!
 * Covariant oscillator wave function of a hadron moving along z with
 * rapidity eta, as a function of the internal separation (z, t).
 *
 * The time-like factor is always the ground-state Gaussian; only the
 * longitudinal quantum number n is excited.
 */
inline double boosted_wavefunction(const OscillatorState& state, double z, double t)
{
    const auto [u, v] = lightcone(z, t);
    const double ep = std::exp(state.eta);
    const double em = std::exp(-state.eta);
    const double arg = (em * u + ep * v) / std::numbers::sqrt2;
    const double gauss = std::exp(-0.5 * (em * em * u * u + ep * ep * v * v));
    return oscillator_prefactor(state.n) * hermite(state.n, arg) * gauss;
}

inline double rest_wavefunction(int n, double z, double t)
{
    return boosted_wavefunction(OscillatorState(n, 0.0), z, t);
}

/*!
 * Eigenvalues of the quadratic form in the Gaussian exponent, along u and v.
 * Their ratio e^{4 eta} measures the squeeze anisotropy.
 */
inline std::pair<double, double> gaussian_form_eigenvalues(double eta)
{
    return {std::exp(-2.0 * eta), std::exp(2.0 * eta)};
}

//---------------------------------------------------------------------------//
// GRIDS AND QUADRATURE
//---------------------------------------------------------------------------//
//! Tail-coverage guard: half-width must reach kTailWidths * e^{|eta|}.
inline constexpr double kTailWidths = 6.0;
//! Default grids keep the spacing at or below this many narrow-axis widths.
inline constexpr double kMaxSpacingWidths = 0.6;
inline constexpr std::size_t kDefaultGridSamples = 512;

inline double tail_half_width(double eta)
{
    return kTailWidths * std::exp(std::abs(eta));
}

inline bool covers_tails(const GridSpec& grid, double eta)
{
    return grid.inner_half_width() >= tail_half_width(eta) * (1.0 - 1e-12);
}

//! Square grid of half-width 6 e^{|eta|}, fine enough for the squeezed axis.
inline GridSpec default_grid(double eta)
{
    const double half = tail_half_width(eta);
    const double max_spacing = kMaxSpacingWidths * std::exp(-std::abs(eta));
    const auto needed = static_cast<std::size_t>(std::ceil(2.0 * half / max_spacing)) + 1;
    return GridSpec::symmetric(half, std::max(kDefaultGridSamples, needed));
}

inline ScalarField sample(const OscillatorState& state, const GridSpec& grid)
{
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.n_z(); ++i) {
        for (std::size_t j = 0; j < grid.n_t(); ++j) {
            values[grid.index(i, j)] = boosted_wavefunction(state, grid.z(i), grid.t(j));
        }
    }
    return {grid, state, Representation::space_time, std::move(values),
            !covers_tails(grid, state.eta)};
}

struct QuadratureResult {
    double value;
    bool tail_warning;
};

/// Integral of |psi|^2 over the grid; should be 1.
inline QuadratureResult normalization(const OscillatorState& state, const GridSpec& grid)
{
    const ScalarField field = sample(state, grid);
    return {norm_squared(field), field.tail_warning};
}

inline QuadratureResult normalization(const OscillatorState& state)
{
    return normalization(state, default_grid(state.eta));
}

//! Integral of psi_m psi_n at common rapidity.
inline QuadratureResult overlap(int m, int n, double eta, const GridSpec& grid)
{
    const ScalarField a = sample(OscillatorState(m, eta), grid);
    const ScalarField b = sample(OscillatorState(n, eta), grid);
    const double value = integrate(grid, [&](std::size_t i, std::size_t j) {
        const std::size_t k = grid.index(i, j);
        return a.real()[k] * b.real()[k];
    });
    return {value, a.tail_warning};
}

/*!
 * Second moments of |field|^2 along the grid diagonals.
 *
 * For a space-time field these are <u^2> and <v^2>; for a momentum-energy
 * field sampled on (q_z, q_0) they are the moments along the positive and
 * negative light-cone axes q_0 = q_z and q_0 = -q_z.
 */
struct DiagonalSpread {
    double plus_variance;
    double minus_variance;

    double std_ratio() const { return std::sqrt(plus_variance / minus_variance); }
};

inline DiagonalSpread diagonal_spread(const ScalarField& field)
{
    const GridSpec& grid = field.grid;
    double mass = 0, plus = 0, minus = 0;
    for (std::size_t i = 0; i < grid.n_z(); ++i) {
        for (std::size_t j = 0; j < grid.n_t(); ++j) {
            const double w = grid.weight_z(i) * grid.weight_t(j);
            const double m = field.modulus(grid.index(i, j));
            const double density = w * m * m;
            const auto [a, b] = lightcone(grid.z(i), grid.t(j));
            mass += density;
            plus += density * a * a;
            minus += density * b * b;
        }
    }
    return {plus / mass, minus / mass};
}

/// Variance of z under |psi_eta|^2 for the ground state: cosh(2 eta) / 2.
inline double marginal_variance(double eta)
{
    return 0.5 * std::cosh(2.0 * eta);
}

//! Quadrature of z^2 |psi|^2 (the ground state has zero mean).
inline double marginal_variance(const OscillatorState& state, const GridSpec& grid)
{
    const ScalarField field = sample(state, grid);
    const double mass = norm_squared(field);
    const double second = integrate(grid, [&](std::size_t i, std::size_t j) {
        const double psi = field.real()[grid.index(i, j)];
        return grid.z(i) * grid.z(i) * psi * psi;
    });
    return second / mass;
}

//---------------------------------------------------------------------------//
// EIGENVALUE ORACLE
//---------------------------------------------------------------------------//
inline constexpr double kMaxEigenSpacing = 0.05;
inline constexpr double kEigenAmplitudeFloor = 1e-3;
inline constexpr std::size_t kMinEigenPoints = 16;

/*!
 * Finite-difference estimate of lambda in
 *   1/2 { (z^2 - t^2) - (d^2/dz^2 - d^2/dt^2) } psi = lambda psi
 * for the rest-frame state n.
 *
 * Three-point central differences on the interior; the estimate is the
 * median of the pointwise ratio over points where |psi| exceeds 1e-3.
 */
inline double eigenvalue_check(int n, const GridSpec& grid)
{
    const double hz = grid.dz();
    const double ht = grid.dt();
    if (hz > kMaxEigenSpacing || ht > kMaxEigenSpacing) {
        throw std::invalid_argument("eigenvalue_check: grid spacing must be <= 0.05");
    }
    const ScalarField field = sample(OscillatorState(n, 0.0), grid);
    const auto& psi = field.real();
    auto at = [&](std::size_t i, std::size_t j) { return psi[grid.index(i, j)]; };

    std::vector<double> ratios;
    for (std::size_t i = 1; i + 1 < grid.n_z(); ++i) {
        for (std::size_t j = 1; j + 1 < grid.n_t(); ++j) {
            const double value = at(i, j);
            if (std::abs(value) <= kEigenAmplitudeFloor) {
                continue;
            }
            const double d2z = (at(i + 1, j) - 2.0 * value + at(i - 1, j)) / (hz * hz);
            const double d2t = (at(i, j + 1) - 2.0 * value + at(i, j - 1)) / (ht * ht);
            const double z = grid.z(i);
            const double t = grid.t(j);
            const double applied = 0.5 * ((z * z - t * t) * value - (d2z - d2t));
            ratios.push_back(applied / value);
        }
    }
    if (ratios.size() < kMinEigenPoints) {
        throw std::runtime_error("eigenvalue_check: too few points above the amplitude floor");
    }
    const auto mid = ratios.begin() + static_cast<std::ptrdiff_t>(ratios.size() / 2);
    std::nth_element(ratios.begin(), mid, ratios.end());
    if (ratios.size() % 2 == 1) {
        return *mid;
    }
    const double upper = *mid;
    const double lower = *std::max_element(ratios.begin(), mid);
    return 0.5 * (lower + upper);
}

//---------------------------------------------------------------------------//
// DEGENERACY
//---------------------------------------------------------------------------//
/// Number of (n_x, n_y, n_z) with n_x + n_y + n_z = N.
inline long long degeneracy(int total_quanta)
{
    if (total_quanta < 0) {
        throw std::invalid_argument("degeneracy: N must be >= 0");
    }
    const long long n = total_quanta;
    return (n + 1) * (n + 2) / 2;
}

}  // namespace wigner
