// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "oracles.hpp"
#include "wigner/wigner.hpp"

namespace {

using namespace wigner;

struct Outcome {
    bool passed;
    std::string detail;
};

struct Criterion {
    const char* id;
    const char* title;
    std::function<Outcome()> run;
};

std::string fmt(const char* pattern, double a, double b = 0, double c = 0)
{
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

std::vector<double> linspace(double lo, double hi, int count)
{
    std::vector<double> out;
    for (int k = 0; k < count; ++k) {
        out.push_back(lo + (hi - lo) * k / (count - 1));
    }
    return out;
}

Outcome check_commutator_suite()
{
    const auto& gens = standard_generators();
    double worst = 0;
    for (const auto& r : lorentz_relations(gens)) {
        worst = std::max(worst, r.residual);
    }
    double iso = 0;
    for (const auto& r : planar_commutation_check(gens)) {
        if (r.relation.starts_with("f{")) {
            iso = r.residual;
        } else {
            worst = std::max(worst, r.residual);
        }
    }
    return {worst <= 1e-12 && iso <= 1e-12,
            fmt("max commutator residual %.3g, structure-constant mismatch %.3g", worst, iso)};
}

Outcome check_little_group_invariance()
{
    using L = GeneratorLabel;
    double worst = 0;
    auto residual = [](const GroupElement& e, const FourVector& p) {
        return max_abs_component(e(p) - p);
    };
    for (double theta : linspace(-5.0, 5.0, 20)) {
        for (auto label : {L::J1, L::J2, L::J3}) {
            for (double m : {0.5, 1.0, 10.0}) {
                worst = std::max(worst, residual(group_element(label, theta), {0, 0, 0, m}));
            }
        }
        for (auto label : {L::N1, L::N2, L::J3}) {
            for (double w : {0.5, 1.0, 10.0}) {
                worst = std::max(worst, residual(group_element(label, theta), {0, 0, w, w}));
            }
        }
    }
    return {worst <= 1e-9, fmt("max residual %.3g over 20 angles in [-5,5]", worst)};
}

Outcome check_contraction()
{
    bool ok = true;
    std::string detail;
    const double eta = 10.0;
    for (auto [source, target, name] :
         {std::tuple{ContractionSource::J2, GeneratorLabel::N1, "N1"},
          std::tuple{ContractionSource::J1, GeneratorLabel::N2, "N2"}}) {
        // Constant from a projection of the contracted generator onto N.
        const CMatrix4 c = contracted_generator(eta, source);
        const CMatrix4 n = generator(target).matrix;
        const complex scale = (n.adjoint() * c).trace() / (n.adjoint() * n).trace();
        ok = ok && std::abs(scale - complex(kContractionScale)) <= 1e-8
             && std::abs(std::abs(scale) - 0.5) <= 1e-8;

        double lo = INFINITY, hi = 0;
        for (double e = 4.0; e <= 10.0 + 1e-12; e += 0.5) {
            const double scaled = contraction_residual(e, source) * std::exp(2 * e);
            lo = std::min(lo, scaled);
            hi = std::max(hi, scaled);
        }
        const double spread = (hi - lo) / lo;
        ok = ok && spread <= 0.01;
        detail += std::string(name) + ": c=" + fmt("%.9f", scale.real())
                  + fmt(", residual*e^{2eta} spread %.2g; ", spread);
    }
    return {ok, detail};
}

Outcome check_boost_block()
{
    double block = 0;
    for (double eta : {-1.0, 0.5, 1.0, 2.0}) {
        const RMatrix4 b = boost_z(eta).matrix();
        block = std::max({block, std::abs(b(2, 2) - std::cosh(eta)),
                          std::abs(b(2, 3) - std::sinh(eta)), std::abs(b(3, 2) - std::sinh(eta)),
                          std::abs(b(3, 3) - std::cosh(eta))});
    }
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> dist(-5, 5);
    double cone = 0;
    for (double eta : {-1.0, 0.5, 1.0, 2.0}) {
        const GroupElement b = boost_z(eta);
        for (int i = 0; i < 200; ++i) {
            const double z = dist(rng), t = dist(rng);
            const FourVector moved = b({0, 0, z, t});
            const auto before = lightcone(z, t);
            const auto after = lightcone(moved.z, moved.t);
            cone = std::max({cone, std::abs(after.u - std::exp(eta) * before.u),
                             std::abs(after.v - std::exp(-eta) * before.v)});
        }
    }
    return {block <= 1e-12 && cone <= 1e-12,
            fmt("cosh/sinh block error %.3g, light-cone eigenaction error %.3g", block, cone)};
}

Outcome check_oscillator_normalization()
{
    double norm_err = 0, ortho_err = 0;
    for (double eta : {0.0, 0.5, 1.0, 2.0}) {
        const GridSpec grid = default_grid(eta);
        std::vector<ScalarField> fields;
        for (int n = 0; n <= 4; ++n) {
            fields.push_back(sample({n, eta}, grid));
        }
        for (int m = 0; m <= 4; ++m) {
            for (int n = m; n <= 4; ++n) {
                const double value = integrate(grid, [&](std::size_t i, std::size_t j) {
                    const std::size_t k = grid.index(i, j);
                    return fields[m].real()[k] * fields[n].real()[k];
                });
                if (m == n) {
                    norm_err = std::max(norm_err, std::abs(value - 1.0));
                } else {
                    ortho_err = std::max(ortho_err, std::abs(value));
                }
            }
        }
    }
    return {norm_err <= 1e-6 && ortho_err <= 1e-6,
            fmt("max |norm-1| %.3g, max |overlap| %.3g (n<=4, eta in {0,0.5,1,2})", norm_err,
                ortho_err)};
}

Outcome check_eigenvalue_oracle()
{
    const GridSpec fine = GridSpec::symmetric(6.0, 601);    // h = 0.02
    const GridSpec coarse = GridSpec::symmetric(6.0, 301);  // h = 0.04
    double worst = 0;
    double min_order = INFINITY, max_order = 0;
    for (int n = 0; n <= 3; ++n) {
        const double err_fine = std::abs(eigenvalue_check(n, fine) - n);
        worst = std::max(worst, err_fine);
        if (n == 0) {
            continue;  // the median error vanishes identically by z<->t symmetry
        }
        const double order = std::log2(std::abs(eigenvalue_check(n, coarse) - n) / err_fine);
        min_order = std::min(min_order, order);
        max_order = std::max(max_order, order);
    }
    return {worst <= 5e-3 && min_order >= 1.8 && max_order <= 2.2,
            fmt("max |lambda-n| %.3g at h=0.02, observed order in [%.3f, %.3f]", worst,
                min_order, max_order)};
}

Outcome check_fourier_duality()
{
    double err = 0, parseval = 0;
    bool ok = true;
    for (double eta : {0.0, 0.5, 1.0}) {
        const FourierComparison c = compare_fourier(eta);
        err = std::max(err, c.max_abs_error);
        parseval = std::max(parseval, c.parseval_error);
        ok = ok && !c.tail_warning;
    }
    return {ok && err <= 1e-6 && parseval <= 1e-5,
            fmt("max | |phi|-closed form | %.3g, Parseval error %.3g", err, parseval)};
}

Outcome check_squeeze_anisotropy()
{
    const double eta = 1.0;
    const ScalarField psi = sample({0, eta}, default_grid(eta));
    const ScalarField phi = fourier_numeric(psi, default_momentum_grid(eta));
    const double space = diagonal_spread(psi).std_ratio();
    const double momentum = diagonal_spread(phi).std_ratio();
    const double target = std::exp(2.0);
    return {std::abs(space - target) <= 1e-6 && std::abs(momentum - target) <= 1e-6,
            fmt("sigma_u/sigma_v = %.9f, sigma_qu/sigma_qv = %.9f, e^2 = %.9f", space, momentum,
                target)};
}

Outcome check_parton_number()
{
    const double eta = rapidity_from_beam({900.0, 0.938});
    const double ratio = coherence_ratio(eta);
    const double exact = std::exp(-2.0 * std::acosh(900.0 / 0.938));
    const bool order = ratio > 1e-7 && ratio < 1e-5;
    return {order && std::abs(ratio - exact) <= 1e-15 * exact + 1e-22
                && std::abs(ratio - 2.7e-7) <= 0.05e-7,
            fmt("eta = %.6f, ratio = %.4g (within a factor 10 of 1e-6)", eta, ratio)};
}

Outcome check_marginal_width()
{
    double worst = 0;
    for (double eta : {0.0, 0.5, 1.0}) {
        worst = std::max(worst, std::abs(marginal_variance({0, eta}, default_grid(eta))
                                         - std::cosh(2 * eta) / 2));
    }
    return {worst <= 1e-6, fmt("max |Var(z) - cosh(2 eta)/2| = %.3g", worst)};
}

Outcome check_degeneracy_count()
{
    for (int n = 0; n <= 20; ++n) {
        if (degeneracy(n) != test::count_triples(n)) {
            return {false, "mismatch at N=" + std::to_string(n)};
        }
    }
    return {true, "(N+1)(N+2)/2 equals enumeration for N = 0..20"};
}

Outcome check_cli_determinism()
{
    struct Case {
        const char* args;
        const char* golden;
    };
    const Case cases[] = {
        {"algebra-check", "algebra_check.csv"},
        {"algebra-check --format json", "algebra_check.json"},
        {"contract --eta-max 10 --steps 10", "contract.csv"},
        {"contract --eta-max 10 --steps 10 --format json", "contract.json"},
        {"coherence --energy 900 --mass 0.938", "coherence.csv"},
        {"coherence --energy 900 --mass 0.938 --format json", "coherence.json"},
        {"squeeze-plot --n 2 --eta 1 --grid -6:6:32", nullptr},
        {"squeeze-plot --n 2 --eta 1 --grid -6:6:32 --format json", nullptr},
    };
    int checked = 0;
    for (const auto& c : cases) {
        const auto first = test::run_cli(c.args);
        const auto second = test::run_cli(c.args);
        if (first.exit_code != 0 || first.output.empty() || first.output != second.output) {
            return {false, std::string("not reproducible: ") + c.args};
        }
        if (c.golden && first.output != test::golden(c.golden)) {
            return {false, std::string("golden mismatch: ") + c.golden};
        }
        ++checked;
    }
    return {true, std::to_string(checked) + " invocations byte-identical, 6 golden files match"};
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {"AC1", "commutator suite", check_commutator_suite},
        {"AC2", "little-group invariance", check_little_group_invariance},
        {"AC3", "contraction to E(2)-like generators", check_contraction},
        {"AC4", "boost block and light-cone eigenaction", check_boost_block},
        {"AC5", "oscillator normalization and orthogonality", check_oscillator_normalization},
        {"AC6", "finite-difference eigenvalue", check_eigenvalue_oracle},
        {"AC7", "Fourier duality and Parseval", check_fourier_duality},
        {"AC8", "squeeze anisotropy in both representations", check_squeeze_anisotropy},
        {"AC9", "parton decoherence ratio", check_parton_number},
        {"AC10", "marginal width", check_marginal_width},
        {"AC11", "degeneracy", check_degeneracy_count},
        {"AC12", "CLI determinism and golden files", check_cli_determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failures += outcome.passed ? 0 : 1;
        std::printf("[%s] %-5s %s: %s\n", outcome.passed ? "PASS" : "FAIL", c.id, c.title,
                    outcome.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
