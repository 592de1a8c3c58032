#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "wigner/four_vector.hpp"
#include "wigner/grid.hpp"
#include "wigner/oscillator.hpp"

namespace wigner {

/*!
 * Momentum-energy conjugate of the quark separation.
 *
 * Light-cone components follow the same orientation as (u, v) in space-time:
 * q_u runs along the positive light cone q_0 = q_z and q_v along
 * q_0 = -q_z. With this labelling the transform of the squeezed space-time
 * Gaussian has the same quadratic form, e^{-2 eta} q_u^2 + e^{2 eta} q_v^2.
 */
struct MomentumPoint {
    double q_z{0};
    double q_0{0};

    double q_u() const { return (q_0 + q_z) / std::numbers::sqrt2; }
    double q_v() const { return (q_0 - q_z) / std::numbers::sqrt2; }

    static MomentumPoint from_lightcone(double q_u, double q_v)
    {
        return {(q_u - q_v) / std::numbers::sqrt2, (q_u + q_v) / std::numbers::sqrt2};
    }
};

struct QuarkPairMomenta {
    FourVector p_a;
    FourVector p_b;
};

//! Hadron four-momentum and internal momentum separation.
struct PairMomenta {
    FourVector total;
    FourVector separation;
};

inline PairMomenta pair_momenta(const QuarkPairMomenta& pair)
{
    return {pair.p_a + pair.p_b, std::numbers::sqrt2 * (pair.p_a - pair.p_b)};
}

/// Closed-form ground-state momentum-energy wave function.
inline double momentum_wavefunction(double eta, const MomentumPoint& q)
{
    const double qu = q.q_u();
    const double qv = q.q_v();
    return std::exp(-0.5 * (std::exp(-2.0 * eta) * qu * qu + std::exp(2.0 * eta) * qv * qv))
           / std::sqrt(std::numbers::pi);
}

inline constexpr std::size_t kDefaultMomentumSamples = 128;

//! Momentum grid with the same extent as default_grid() and at least 128 samples.
inline GridSpec default_momentum_grid(double eta)
{
    const double half = tail_half_width(eta);
    const double max_spacing = kMaxSpacingWidths * std::exp(-std::abs(eta));
    const auto needed = static_cast<std::size_t>(std::ceil(2.0 * half / max_spacing)) + 1;
    return GridSpec::symmetric(half, std::max(kDefaultMomentumSamples, needed));
}

/*!
 * Direct double quadrature of
 *   phi(q_z, q_0) = 1/(2 pi) \iint psi(z, t) exp{-i (q_z z - q_0 t)} dz dt
 * with trapezoid weights. The kernel factorizes, so the sum is done as two
 * passes (over z, then over t) with tabulated phase factors.
 */
inline ScalarField fourier_numeric(const ScalarField& field, const GridSpec& momentum_grid)
{
    if (field.representation != Representation::space_time || field.is_complex()) {
        throw std::invalid_argument("fourier_numeric: input must be a real space-time field");
    }
    using cplx = std::complex<double>;
    const GridSpec& in = field.grid;
    const GridSpec& out = momentum_grid;
    const auto& psi = field.real();

    std::vector<cplx> kernel_z(out.n_z() * in.n_z());
    for (std::size_t a = 0; a < out.n_z(); ++a) {
        for (std::size_t i = 0; i < in.n_z(); ++i) {
            kernel_z[a * in.n_z() + i] = in.weight_z(i) * std::polar(1.0, -out.z(a) * in.z(i));
        }
    }
    std::vector<cplx> kernel_t(out.n_t() * in.n_t());
    for (std::size_t b = 0; b < out.n_t(); ++b) {
        for (std::size_t j = 0; j < in.n_t(); ++j) {
            kernel_t[b * in.n_t() + j] = in.weight_t(j) * std::polar(1.0, out.t(b) * in.t(j));
        }
    }

    // partial[a][j] = sum_i K_z(a, i) psi(i, j)
    std::vector<cplx> partial(out.n_z() * in.n_t(), cplx{});
    for (std::size_t a = 0; a < out.n_z(); ++a) {
        cplx* row = &partial[a * in.n_t()];
        for (std::size_t i = 0; i < in.n_z(); ++i) {
            const cplx k = kernel_z[a * in.n_z() + i];
            const double* src = &psi[in.index(i, 0)];
            for (std::size_t j = 0; j < in.n_t(); ++j) {
                row[j] += k * src[j];
            }
        }
    }

    const double prefactor = 1.0 / (2.0 * std::numbers::pi);
    std::vector<cplx> values(out.size());
    for (std::size_t a = 0; a < out.n_z(); ++a) {
        const cplx* row = &partial[a * in.n_t()];
        for (std::size_t b = 0; b < out.n_t(); ++b) {
            const cplx* k = &kernel_t[b * in.n_t()];
            cplx sum{};
            for (std::size_t j = 0; j < in.n_t(); ++j) {
                sum += k[j] * row[j];
            }
            values[out.index(a, b)] = prefactor * sum;
        }
    }
    const bool warn = field.tail_warning || !covers_tails(in, field.state.eta);
    return {out, field.state, Representation::momentum_energy, std::move(values), warn};
}

//! Closed-form ground state sampled on a momentum grid.
inline ScalarField sample_momentum(double eta, const GridSpec& grid)
{
    std::vector<double> values(grid.size());
    for (std::size_t a = 0; a < grid.n_z(); ++a) {
        for (std::size_t b = 0; b < grid.n_t(); ++b) {
            values[grid.index(a, b)] = momentum_wavefunction(eta, {grid.z(a), grid.t(b)});
        }
    }
    return {grid, OscillatorState(0, eta), Representation::momentum_energy, std::move(values),
            false};
}

//---------------------------------------------------------------------------//
// NUMERIC VS CLOSED-FORM COMPARISON
//---------------------------------------------------------------------------//
inline constexpr double kFourierTolerance = 1e-6;
inline constexpr double kParsevalTolerance = 1e-5;
//! Central region: inside the 4-sigma ellipse of the closed form.
inline constexpr double kCentralSigmas = 4.0;

struct FourierComparison {
    double max_abs_error;     //!< max | |phi_numeric| - phi_closed | in the central region
    double parseval_error;    //!< | \iint |phi|^2 - \iint |psi|^2 |
    double space_norm;
    double momentum_norm;
    double max_imag;          //!< largest |Im phi| after removing the phase of phi(0)
    std::size_t central_points;
    bool tail_warning;

    bool passed() const
    {
        return !tail_warning && max_abs_error <= kFourierTolerance
               && parseval_error <= kParsevalTolerance;
    }
};

inline FourierComparison compare_fourier(double eta, const GridSpec& space_grid,
                                         const GridSpec& momentum_grid)
{
    const ScalarField psi = sample(OscillatorState(0, eta), space_grid);
    const ScalarField phi = fourier_numeric(psi, momentum_grid);
    const auto& values = phi.complex_values();

    FourierComparison result{};
    result.tail_warning = phi.tail_warning;
    result.space_norm = norm_squared(psi);
    result.momentum_norm = norm_squared(phi);
    result.parseval_error = std::abs(result.momentum_norm - result.space_norm);

    // Global phase taken from the sample nearest the origin.
    std::size_t origin = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < momentum_grid.n_z(); ++a) {
        for (std::size_t b = 0; b < momentum_grid.n_t(); ++b) {
            const double r = std::hypot(momentum_grid.z(a), momentum_grid.t(b));
            if (r < best) {
                best = r;
                origin = momentum_grid.index(a, b);
            }
        }
    }
    const std::complex<double> phase = std::polar(1.0, -std::arg(values[origin]));

    const double limit = 0.5 * kCentralSigmas * kCentralSigmas;
    for (std::size_t a = 0; a < momentum_grid.n_z(); ++a) {
        for (std::size_t b = 0; b < momentum_grid.n_t(); ++b) {
            const MomentumPoint q{momentum_grid.z(a), momentum_grid.t(b)};
            const double qu = q.q_u(), qv = q.q_v();
            const double exponent
                = 0.5 * (std::exp(-2.0 * eta) * qu * qu + std::exp(2.0 * eta) * qv * qv);
            const std::size_t k = momentum_grid.index(a, b);
            result.max_imag = std::max(result.max_imag, std::abs((phase * values[k]).imag()));
            if (exponent > limit) {
                continue;
            }
            ++result.central_points;
            const double err = std::abs(std::abs(values[k]) - momentum_wavefunction(eta, q));
            result.max_abs_error = std::max(result.max_abs_error, err);
        }
    }
    return result;
}

inline FourierComparison compare_fourier(double eta)
{
    return compare_fourier(eta, default_grid(eta), default_momentum_grid(eta));
}

}  // namespace wigner
