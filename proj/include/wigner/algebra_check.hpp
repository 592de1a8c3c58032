#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "wigner/euclidean_plane.hpp"
#include "wigner/four_vector.hpp"
#include "wigner/lorentz_algebra.hpp"

namespace wigner {

inline constexpr double kCommutatorTolerance = 1e-12;
inline constexpr double kInvarianceTolerance = 1e-9;

struct RelationResult {
    std::string relation;
    double residual;
    double tolerance;

    bool passed() const { return residual <= tolerance; }
};

struct AlgebraReport {
    std::vector<RelationResult> relations;

    bool passed() const
    {
        return std::all_of(relations.begin(), relations.end(),
                           [](const RelationResult& r) { return r.passed(); });
    }
};

namespace detail {

inline int levi_civita(int i, int j, int k)
{
    return (i - j) * (j - k) * (k - i) / 2;
}

inline std::string bracket_name(std::string_view a, std::string_view b)
{
    return "[" + std::string(a) + "," + std::string(b) + "]";
}

// i * sum_k eps_ijk M_k, written out as a readable right-hand side.
inline std::string epsilon_rhs(int i, int j, char family, bool negate)
{
    if (i == j) {
        return "0";
    }
    const int k = 3 - i - j;
    int sign = levi_civita(i, j, k) * (negate ? -1 : 1);
    return std::string(sign > 0 ? "" : "-") + "i" + family + std::to_string(k + 1);
}

}  // namespace detail

/// Commutators of the Lorentz algebra and of the E(2)-like little group.
inline std::vector<RelationResult> lorentz_relations(const GeneratorSet& gens)
{
    using detail::levi_civita;
    std::vector<RelationResult> out;
    const auto& j = gens.rotation;
    const auto& k = gens.boost;

    auto eps_sum = [](const std::array<CMatrix4, 3>& family, int a, int b) {
        CMatrix4 sum = CMatrix4::Zero();
        for (int c = 0; c < 3; ++c) {
            sum += static_cast<double>(levi_civita(a, b, c)) * family[c];
        }
        return CMatrix4(kI * sum);
    };
    auto name = [](char fa, int a, char fb, int b) {
        return detail::bracket_name(std::string(1, fa) + std::to_string(a + 1),
                                    std::string(1, fb) + std::to_string(b + 1));
    };

    // [Ji, Jj] = i eps_ijk Jk
    for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{2, 0}}) {
        out.push_back({name('J', a, 'J', b) + " = " + detail::epsilon_rhs(a, b, 'J', false),
                       max_abs(commutator(j[a], j[b]) - eps_sum(j, a, b)),
                       kCommutatorTolerance});
    }
    // [Ji, Kj] = i eps_ijk Kk
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            out.push_back({name('J', a, 'K', b) + " = " + detail::epsilon_rhs(a, b, 'K', false),
                           max_abs(commutator(j[a], k[b]) - eps_sum(k, a, b)),
                           kCommutatorTolerance});
        }
    }
    // [Ki, Kj] = -i eps_ijk Jk
    for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{2, 0}}) {
        out.push_back({name('K', a, 'K', b) + " = " + detail::epsilon_rhs(a, b, 'J', true),
                       max_abs(commutator(k[a], k[b]) + eps_sum(j, a, b)),
                       kCommutatorTolerance});
    }

    const CMatrix4 n1 = gens.n1();
    const CMatrix4 n2 = gens.n2();
    out.push_back({"[N1,N2] = 0", max_abs(commutator(n1, n2)), kCommutatorTolerance});
    out.push_back({"[J3,N1] = iN2", max_abs(commutator(j[2], n1) - kI * n2),
                   kCommutatorTolerance});
    out.push_back({"[J3,N2] = -iN1", max_abs(commutator(j[2], n2) + kI * n1),
                   kCommutatorTolerance});
    return out;
}

/// The three E(2) relations plus the label-for-label match J3->L, N1->Px, N2->Py.
inline std::vector<RelationResult> planar_commutation_check(const GeneratorSet& gens)
{
    const CMatrix3 l = planar_generator(PlanarLabel::L).matrix;
    const CMatrix3 px = planar_generator(PlanarLabel::Px).matrix;
    const CMatrix3 py = planar_generator(PlanarLabel::Py).matrix;

    std::vector<RelationResult> out;
    out.push_back({"[Px,Py] = 0", max_abs(commutator(px, py)), kCommutatorTolerance});
    out.push_back({"[L,Px] = iPy", max_abs(commutator(l, px) - kI * py), kCommutatorTolerance});
    out.push_back({"[L,Py] = -iPx", max_abs(commutator(l, py) + kI * px), kCommutatorTolerance});

    const auto little = structure_constants<4>({gens.rotation[2], gens.n1(), gens.n2()});
    const auto plane = planar_structure_constants();
    const double misfit = std::max(little.fit_residual, plane.fit_residual);
    out.push_back({"f{J3,N1,N2} = f{L,Px,Py}", std::max(max_difference(little, plane), misfit),
                   kCommutatorTolerance});
    return out;
}

inline std::vector<RelationResult> planar_commutation_check()
{
    return planar_commutation_check(standard_generators());
}

/*!
 * Little-group invariance: rotations fix a particle at rest, and J3, N1, N2
 * fix a massless momentum along +z. Exponentials are taken of the matrices
 * in the given set.
 */
inline std::vector<RelationResult> little_group_invariance(const GeneratorSet& gens)
{
    constexpr double kTheta = 1.2;
    const Eigen::Vector4cd rest(0, 0, 0, 1);
    const Eigen::Vector4cd lightlike(0, 0, 1, 1);

    auto residual = [&](const CMatrix4& g, const Eigen::Vector4cd& p) {
        const CMatrix4 elem = expm(CMatrix4(-kI * kTheta * g));
        return (elem * p - p).cwiseAbs().maxCoeff();
    };

    std::vector<RelationResult> out;
    for (auto label : {GeneratorLabel::J1, GeneratorLabel::J2, GeneratorLabel::J3}) {
        out.push_back({"exp(-i " + std::string(to_string(label)) + ") fixes (0,0,0,m)",
                       residual(gens.matrix(label), rest), kInvarianceTolerance});
    }
    for (auto label : {GeneratorLabel::J3, GeneratorLabel::N1, GeneratorLabel::N2}) {
        out.push_back({"exp(-i " + std::string(to_string(label)) + ") fixes (0,0,w,w)",
                       residual(gens.matrix(label), lightlike), kInvarianceTolerance});
    }
    return out;
}

inline AlgebraReport run_algebra_check(const GeneratorSet& gens = standard_generators())
{
    AlgebraReport report;
    for (auto part : {lorentz_relations(gens), planar_commutation_check(gens),
                      little_group_invariance(gens)}) {
        report.relations.insert(report.relations.end(), part.begin(), part.end());
    }
    return report;
}

}  // namespace wigner
