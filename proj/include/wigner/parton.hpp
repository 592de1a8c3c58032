#pragma once

#include <cmath>
#include <stdexcept>

namespace wigner {

//! Proton mass in GeV, used when a beam mass is not given.
inline constexpr double kProtonMassGeV = 0.938;

struct BeamSpec {
    double energy;  //!< GeV
    double mass{kProtonMassGeV};  //!< GeV
};

/// Rapidity of a particle with the given energy and mass: arccosh(E/m).
inline double rapidity_from_beam(const BeamSpec& beam)
{
    if (!std::isfinite(beam.energy) || !std::isfinite(beam.mass) || !(beam.mass > 0.0)) {
        throw std::invalid_argument("rapidity_from_beam: mass must be positive and finite");
    }
    if (beam.energy < beam.mass) {
        throw std::invalid_argument("rapidity_from_beam: energy is below the rest mass");
    }
    return std::acosh(beam.energy / beam.mass);
}

// Internal oscillation period, in units of the rest-frame period.
inline double period_dilation(double eta)
{
    return std::exp(eta);
}

// Time a counter-propagating probe spends crossing the hadron, relative to rest.
inline double interaction_time_contraction(double eta)
{
    return std::exp(-eta);
}

/*!
 * Ratio of the external interaction time to the internal oscillation period,
 * e^{-2 eta}. A small value means the probe sees the constituents frozen,
 * i.e. as incoherent free partons.
 */
inline double coherence_ratio(double eta)
{
    return interaction_time_contraction(eta) / period_dilation(eta);
}

}  // namespace wigner
