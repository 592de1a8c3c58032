// wigner: little-group algebra, oscillator squeeze and parton scaling from the
// command line.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace wigner::cli;

int main(int argc, char** argv)
{
    CLI::App app{"Wigner little groups, covariant oscillator squeeze and parton decoherence"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "csv";
    std::string output_path;
    const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--output", output_path, "Write to this file instead of standard output");

    AlgebraCheckOptions algebra;
    auto* algebra_cmd = app.add_subcommand(
        "algebra-check", "Verify commutators, the E(2) isomorphism and little-group invariance");
    algebra_cmd->add_flag("--corrupt", algebra.corrupt,
                          "Perturb J1 before checking (negative control; must fail)");

    ContractOptions contract_opts;
    auto* contract_cmd = app.add_subcommand(
        "contract", "Tabulate the contraction of J2 (or J1) into N1 (N2) under z-boosts");
    contract_cmd->add_option("--eta-max", contract_opts.eta_max, "Largest rapidity")
        ->capture_default_str();
    contract_cmd->add_option("--steps", contract_opts.steps, "Number of rapidity intervals")
        ->capture_default_str();
    contract_cmd->add_option("--source", contract_opts.source, "Rotation generator, J1 or J2")
        ->check(CLI::IsMember({"J1", "J2"}))
        ->capture_default_str();

    SqueezePlotOptions squeeze;
    auto* squeeze_cmd = app.add_subcommand(
        "squeeze-plot", "Emit space-time and momentum-energy wave functions on a grid");
    squeeze_cmd->add_option("--n", squeeze.n, "Longitudinal excitation")->capture_default_str();
    squeeze_cmd->add_option("--eta", squeeze.eta, "Boost rapidity")->capture_default_str();
    squeeze_cmd->add_option("--grid", squeeze.grid,
                            "ZMIN:ZMAX:NZ[,TMIN:TMAX:NT] (default +-6e^|eta|, 65 samples)");

    FourierCheckOptions fourier;
    auto* fourier_cmd = app.add_subcommand(
        "fourier-check", "Compare the numeric transform of the ground state with the closed form");
    fourier_cmd->add_option("--eta", fourier.eta, "Boost rapidity")->capture_default_str();
    fourier_cmd->add_option("--grid", fourier.grid, "Space-time grid ZMIN:ZMAX:NZ[,TMIN:TMAX:NT]");

    CoherenceOptions coherence_opts;
    auto* coherence_cmd = app.add_subcommand(
        "coherence", "Interaction-time to oscillation-period ratio for a beam");
    coherence_cmd->add_option("--energy", coherence_opts.energy, "Beam energy in GeV")
        ->required();
    coherence_cmd->add_option("--mass", coherence_opts.mass,
                              "Particle mass in GeV (default: proton, 0.938)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitBadArguments;
    }

    const Format format = formats.at(format_name);
    std::ostringstream buffer;
    int code = kExitSuccess;
    try {
        if (algebra_cmd->parsed()) {
            code = algebra_check(algebra, format, buffer);
        } else if (contract_cmd->parsed()) {
            code = contract(contract_opts, format, buffer);
        } else if (squeeze_cmd->parsed()) {
            code = squeeze_plot(squeeze, format, buffer);
        } else if (fourier_cmd->parsed()) {
            code = fourier_check(fourier, format, buffer);
        } else if (coherence_cmd->parsed()) {
            code = coherence(coherence_opts, format, buffer);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArguments;
    }

    if (output_path.empty()) {
        std::cout << buffer.str();
    } else {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open " << output_path << '\n';
            return kExitBadArguments;
        }
        out << buffer.str();
    }
    if (code == kExitCheckFailed) {
        std::cerr << "check failed\n";
    }
    return code;
}
