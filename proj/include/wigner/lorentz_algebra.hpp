#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wigner/four_vector.hpp"
#include "wigner/linalg.hpp"

namespace wigner {

//---------------------------------------------------------------------------//
// GENERATORS
//---------------------------------------------------------------------------//
/*!
 * Lorentz generators in the vector representation on (x, y, z, t).
 *
 * Index order is x=0, y=1, z=2, t=3. Writing E(a,b) for the unit matrix with
 * a one in row a, column b, the library constants are
 *
 *   J1 = i [E(z,y) - E(y,z)]    K1 = i [E(x,t) + E(t,x)]
 *   J2 = i [E(x,z) - E(z,x)]    K2 = i [E(y,t) + E(t,y)]
 *   J3 = i [E(y,x) - E(x,y)]    K3 = i [E(z,t) + E(t,z)]
 *
 *   N1 = K1 - J2,  N2 = K2 + J1
 *
 * so that exp(-i theta J3) turns x toward y and exp(-i eta K3) acts on (z, t)
 * as [[cosh, sinh], [sinh, cosh]]. Every J is Hermitian, every K is
 * anti-Hermitian, and i*G is real for all eight.
 */
enum class GeneratorLabel { J1, J2, J3, K1, K2, K3, N1, N2 };

inline constexpr std::array<GeneratorLabel, 8> kAllGeneratorLabels{
    GeneratorLabel::J1, GeneratorLabel::J2, GeneratorLabel::J3, GeneratorLabel::K1,
    GeneratorLabel::K2, GeneratorLabel::K3, GeneratorLabel::N1, GeneratorLabel::N2};

inline constexpr std::string_view to_string(GeneratorLabel label)
{
    switch (label) {
        case GeneratorLabel::J1: return "J1";
        case GeneratorLabel::J2: return "J2";
        case GeneratorLabel::J3: return "J3";
        case GeneratorLabel::K1: return "K1";
        case GeneratorLabel::K2: return "K2";
        case GeneratorLabel::K3: return "K3";
        case GeneratorLabel::N1: return "N1";
        case GeneratorLabel::N2: return "N2";
    }
    return "?";
}

inline GeneratorLabel parse_generator_label(std::string_view name)
{
    for (auto label : kAllGeneratorLabels) {
        if (to_string(label) == name) {
            return label;
        }
    }
    throw std::invalid_argument("unknown generator label '" + std::string(name) + "'");
}

struct Generator {
    GeneratorLabel label;
    CMatrix4 matrix;
};

/*!
 * The six independent generators J1..J3, K1..K3.
 *
 * The check suite runs against a set rather than the library constants so
 * that a deliberately perturbed set can serve as a negative control.
 */
struct GeneratorSet {
    std::array<CMatrix4, 3> rotation;
    std::array<CMatrix4, 3> boost;

    CMatrix4 n1() const { return boost[0] - rotation[1]; }
    CMatrix4 n2() const { return boost[1] + rotation[0]; }

    CMatrix4 matrix(GeneratorLabel label) const
    {
        switch (label) {
            case GeneratorLabel::J1: return rotation[0];
            case GeneratorLabel::J2: return rotation[1];
            case GeneratorLabel::J3: return rotation[2];
            case GeneratorLabel::K1: return boost[0];
            case GeneratorLabel::K2: return boost[1];
            case GeneratorLabel::K3: return boost[2];
            case GeneratorLabel::N1: return n1();
            case GeneratorLabel::N2: return n2();
        }
        throw std::invalid_argument("unknown generator label");
    }
};

namespace detail {

inline CMatrix4 unit(int row, int col)
{
    CMatrix4 m = CMatrix4::Zero();
    m(row, col) = 1.0;
    return m;
}

}  // namespace detail

inline const GeneratorSet& standard_generators()
{
    using detail::unit;
    constexpr int x = 0, y = 1, z = 2, t = 3;
    static const GeneratorSet set{
        {CMatrix4(kI * (unit(z, y) - unit(y, z))), CMatrix4(kI * (unit(x, z) - unit(z, x))),
         CMatrix4(kI * (unit(y, x) - unit(x, y)))},
        {CMatrix4(kI * (unit(x, t) + unit(t, x))), CMatrix4(kI * (unit(y, t) + unit(t, y))),
         CMatrix4(kI * (unit(z, t) + unit(t, z)))}};
    return set;
}

inline Generator generator(GeneratorLabel label)
{
    return {label, standard_generators().matrix(label)};
}

inline Generator generator(std::string_view name)
{
    return generator(parse_generator_label(name));
}

inline CMatrix4 commutator(const Generator& a, const Generator& b)
{
    return commutator(a.matrix, b.matrix);
}

//---------------------------------------------------------------------------//
// GROUP ELEMENTS
//---------------------------------------------------------------------------//
//! Which one-parameter subgroup an element came from.
struct Provenance {
    GeneratorLabel label;
    double parameter;
};

/*!
 * A real 4x4 Lorentz transformation acting on (x, y, z, t) columns.
 *
 * Elements built by group_element() remember their generator and parameter;
 * products and inverses do not.
 */
class GroupElement
{
  public:
    GroupElement() : matrix_(RMatrix4::Identity()) {}
    explicit GroupElement(const RMatrix4& matrix, std::optional<Provenance> provenance = {})
        : matrix_(matrix), provenance_(provenance)
    {
    }

    static GroupElement identity() { return GroupElement(); }

    const RMatrix4& matrix() const { return matrix_; }
    const std::optional<Provenance>& provenance() const { return provenance_; }

    FourVector operator()(const FourVector& p) const
    {
        return FourVector::from_eigen(matrix_ * p.to_eigen());
    }

    GroupElement operator*(const GroupElement& other) const
    {
        return GroupElement(matrix_ * other.matrix_);
    }

    GroupElement inverse() const { return GroupElement(matrix_.inverse()); }

    double determinant() const { return matrix_.determinant(); }

  private:
    RMatrix4 matrix_;
    std::optional<Provenance> provenance_;
};

//! Largest imaginary entry tolerated (and discarded) in exp(-i theta G).
inline constexpr double kImaginaryResidueTolerance = 1e-12;

/// exp(-i theta G) for one of the eight generators.
inline GroupElement group_element(const Generator& g, double theta)
{
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("group_element: parameter must be finite");
    }
    const CMatrix4 exponent = CMatrix4(-kI * theta * g.matrix);
    const CMatrix4 full = expm(exponent);
    const double residue = full.imag().cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, full.real().cwiseAbs().maxCoeff());
    if (residue > kImaginaryResidueTolerance * scale) {
        throw std::domain_error("group_element: exponential is not real for generator "
                                + std::string(to_string(g.label)));
    }
    return GroupElement(full.real(), Provenance{g.label, theta});
}

inline GroupElement group_element(GeneratorLabel label, double theta)
{
    return group_element(generator(label), theta);
}

//! Pure boost along +z with rapidity eta: exp(-i eta K3).
inline GroupElement boost_z(double eta)
{
    return group_element(GeneratorLabel::K3, eta);
}

inline bool leaves_invariant(const GroupElement& elem, const FourVector& p, double tol)
{
    if (!(tol > 0.0)) {
        throw std::invalid_argument("leaves_invariant: tolerance must be positive");
    }
    return max_abs_component(elem(p) - p) <= tol;
}

//---------------------------------------------------------------------------//
// CONTRACTION
//---------------------------------------------------------------------------//
enum class ContractionSource { J1, J2 };

/*!
 * Limit of the contracted rotation generators as a multiple of N1 / N2.
 *
 *   e^{-eta} B J2 B^{-1}   ->  kContractionScale * N1
 *  -e^{-eta} B J1 B^{-1}   ->  kContractionScale * N2
 *
 * with B = exp(-i eta K3). Conjugating the other way round converges to the
 * little group of a particle moving along -z instead.
 */
inline constexpr double kContractionScale = -0.5;

/*!
 * Transverse rotation generator seen from a frame boosted along z, rescaled
 * by e^{-eta}. The residual to the limit is exactly proportional to
 * e^{-2 eta}.
 */
inline CMatrix4 contracted_generator(double eta, ContractionSource source)
{
    if (!std::isfinite(eta) || eta < 0.0) {
        throw std::invalid_argument("contracted_generator: eta must be finite and >= 0");
    }
    const RMatrix4 b = boost_z(eta).matrix();
    const RMatrix4 b_inv = boost_z(-eta).matrix();
    const auto& gens = standard_generators();
    const double sign = source == ContractionSource::J2 ? 1.0 : -1.0;
    const CMatrix4& rotation = source == ContractionSource::J2 ? gens.rotation[1]
                                                               : gens.rotation[0];
    const CMatrix4 conj = b.cast<complex>() * rotation * b_inv.cast<complex>();
    return CMatrix4(sign * std::exp(-eta) * conj);
}

inline CMatrix4 contraction_limit(ContractionSource source)
{
    const auto& gens = standard_generators();
    return CMatrix4(kContractionScale
                    * (source == ContractionSource::J2 ? gens.n1() : gens.n2()));
}

//! Frobenius distance between the contracted generator and its limit.
inline double contraction_residual(double eta, ContractionSource source)
{
    return (contracted_generator(eta, source) - contraction_limit(source)).norm();
}

}  // namespace wigner
