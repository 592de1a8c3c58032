#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wigner/linalg.hpp"

namespace wigner {

/*!
 * Generators of E(2) acting on homogeneous plane coordinates (x, y, 1).
 *
 *   L  = i [E(y,x) - E(x,y)]   rotation, same orientation as J3
 *   Px = i E(x,w)              exp(-i a Px) (x, y, 1) = (x + a, y, 1)
 *   Py = i E(y,w)
 */
enum class PlanarLabel { L, Px, Py };

inline constexpr std::string_view to_string(PlanarLabel label)
{
    switch (label) {
        case PlanarLabel::L: return "L";
        case PlanarLabel::Px: return "Px";
        case PlanarLabel::Py: return "Py";
    }
    return "?";
}

struct PlanarGenerator {
    PlanarLabel label;
    CMatrix3 matrix;
};

inline PlanarGenerator planar_generator(PlanarLabel label)
{
    constexpr int x = 0, y = 1, w = 2;
    CMatrix3 m = CMatrix3::Zero();
    switch (label) {
        case PlanarLabel::L:
            m(y, x) = kI;
            m(x, y) = -kI;
            break;
        case PlanarLabel::Px: m(x, w) = kI; break;
        case PlanarLabel::Py: m(y, w) = kI; break;
    }
    return {label, m};
}

//! exp(-i a G) as a real 3x3 matrix.
inline RMatrix3 planar_element(PlanarLabel label, double a)
{
    return expm(CMatrix3(-kI * a * planar_generator(label).matrix)).real();
}

/*!
 * Structure constants f[a][b][c] with [X_a, X_b] = sum_c f[a][b][c] X_c.
 *
 * Each bracket is expanded in the basis by least squares over the flattened
 * entries; fit_residual reports the largest entrywise misfit, which is zero
 * when the basis closes under commutation.
 */
struct StructureConstants {
    std::array<std::array<std::array<complex, 3>, 3>, 3> f{};
    double fit_residual{0};
};

template <int N>
StructureConstants structure_constants(const std::array<CMatrix<N>, 3>& basis)
{
    constexpr int kEntries = N * N;
    Eigen::Matrix<complex, kEntries, 3> design;
    for (int c = 0; c < 3; ++c) {
        design.col(c) = basis[c].reshaped();
    }
    const auto solver = design.colPivHouseholderQr();

    StructureConstants result;
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            const CMatrix<N> bracket = commutator(basis[a], basis[b]);
            const Eigen::Matrix<complex, kEntries, 1> rhs = bracket.reshaped();
            const Eigen::Vector3cd coeffs = solver.solve(rhs);
            for (int c = 0; c < 3; ++c) {
                result.f[a][b][c] = coeffs[c];
            }
            result.fit_residual
                = std::max(result.fit_residual, (design * coeffs - rhs).cwiseAbs().maxCoeff());
        }
    }
    return result;
}

inline double max_difference(const StructureConstants& lhs, const StructureConstants& rhs)
{
    double diff = 0;
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            for (int c = 0; c < 3; ++c) {
                diff = std::max(diff, std::abs(lhs.f[a][b][c] - rhs.f[a][b][c]));
            }
        }
    }
    return diff;
}

inline StructureConstants planar_structure_constants()
{
    return structure_constants<3>({planar_generator(PlanarLabel::L).matrix,
                                   planar_generator(PlanarLabel::Px).matrix,
                                   planar_generator(PlanarLabel::Py).matrix});
}

}  // namespace wigner
