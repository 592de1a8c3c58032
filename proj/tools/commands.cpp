#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "wigner/wigner.hpp"

namespace wigner::cli {

using nlohmann::ordered_json;

namespace {

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

double parse_double(const std::string& text)
{
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw std::invalid_argument("not a number: '" + text + "'");
    }
    return value;
}

std::size_t parse_count(const std::string& text)
{
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("not a sample count: '" + text + "'");
    }
    return std::stoul(text);
}

ordered_json grid_json(const GridSpec& g)
{
    return {{"z_min", round12(g.z_min())}, {"z_max", round12(g.z_max())}, {"n_z", g.n_z()},
            {"t_min", round12(g.t_min())}, {"t_max", round12(g.t_max())}, {"n_t", g.n_t()}};
}

ContractionSource parse_source(const std::string& name)
{
    if (name == "J2") {
        return ContractionSource::J2;
    }
    if (name == "J1") {
        return ContractionSource::J1;
    }
    throw std::invalid_argument("contraction source must be J1 or J2");
}

}  // namespace

GridSpec parse_grid(const std::string& text)
{
    const auto axes = split(text, ',');
    if (axes.empty() || axes.size() > 2) {
        throw std::invalid_argument("grid must be ZMIN:ZMAX:NZ[,TMIN:TMAX:NT]");
    }
    auto axis = [](const std::string& spec) {
        const auto fields = split(spec, ':');
        if (fields.size() != 3) {
            throw std::invalid_argument("grid axis must be MIN:MAX:N, got '" + spec + "'");
        }
        return std::tuple{parse_double(fields[0]), parse_double(fields[1]),
                          parse_count(fields[2])};
    };
    const auto [z_min, z_max, n_z] = axis(axes[0]);
    const auto [t_min, t_max, n_t] = axes.size() == 2 ? axis(axes[1]) : axis(axes[0]);
    return GridSpec(z_min, z_max, n_z, t_min, t_max, n_t);
}

//---------------------------------------------------------------------------//
int algebra_check(const AlgebraCheckOptions& opts, Format format, std::ostream& os)
{
    GeneratorSet gens = standard_generators();
    if (opts.corrupt) {
        // Negative control: a small error in one rotation generator.
        gens.rotation[0](0, 1) += 1e-6;
    }
    const AlgebraReport report = run_algebra_check(gens);

    if (format == Format::csv) {
        CsvTable table({"relation", "residual", "tolerance", "passed"});
        for (const auto& r : report.relations) {
            table.row().add(r.relation).add(r.residual).add(r.tolerance).add(r.passed());
        }
        table.write(os);
    } else {
        ordered_json failed = ordered_json::array();
        ordered_json residuals = ordered_json::object();
        double worst = 0;
        for (const auto& r : report.relations) {
            residuals[r.relation] = round12(r.residual);
            worst = std::max(worst, r.residual);
            if (!r.passed()) {
                failed.push_back(r.relation);
            }
        }
        write_json(os, {{"corrupt", opts.corrupt}},
                   {{"passed", report.passed()},
                    {"relation_count", report.relations.size()},
                    {"max_residual", round12(worst)},
                    {"failed", failed}},
                   residuals);
    }
    return report.passed() ? kExitSuccess : kExitCheckFailed;
}

//---------------------------------------------------------------------------//
int contract(const ContractOptions& opts, Format format, std::ostream& os)
{
    if (!(opts.eta_max > 0.0) || !std::isfinite(opts.eta_max) || opts.steps < 1) {
        throw std::invalid_argument("contract: need --eta-max > 0 and --steps >= 1");
    }
    const ContractionSource source = parse_source(opts.source);

    struct Row {
        double eta, residual, scaled;
    };
    std::vector<Row> rows;
    for (int k = 0; k <= opts.steps; ++k) {
        const double eta = opts.eta_max * k / opts.steps;
        const double residual = contraction_residual(eta, source);
        rows.push_back({eta, residual, residual * std::exp(2.0 * eta)});
    }

    if (format == Format::csv) {
        CsvTable table({"eta", "residual", "scaled_residual"});
        for (const auto& r : rows) {
            table.row().add(r.eta).add(r.residual).add(r.scaled);
        }
        table.write(os);
        return kExitSuccess;
    }

    ordered_json table = ordered_json::array();
    double lo = INFINITY, hi = 0;
    for (const auto& r : rows) {
        table.push_back({{"eta", round12(r.eta)},
                         {"residual", round12(r.residual)},
                         {"scaled_residual", round12(r.scaled)}});
        if (r.eta >= 4.0) {
            lo = std::min(lo, r.scaled);
            hi = std::max(hi, r.scaled);
        }
    }
    ordered_json residuals = ordered_json::object();
    residuals["at_rest"] = round12(rows.front().residual);
    residuals["at_eta_max"] = round12(rows.back().residual);
    if (hi > 0) {
        residuals["scaled_spread_eta_ge_4"] = round12((hi - lo) / hi);
    }
    write_json(os, {{"eta_max", round12(opts.eta_max)}, {"steps", opts.steps},
                    {"source", opts.source}},
               {{"limit_scale", kContractionScale}, {"rows", table}}, residuals);
    return kExitSuccess;
}

//---------------------------------------------------------------------------//
int squeeze_plot(const SqueezePlotOptions& opts, Format format, std::ostream& os)
{
    const OscillatorState state(opts.n, opts.eta);
    if (state.n > kMaxHermiteDegree) {
        throw std::invalid_argument("squeeze-plot: n must be <= 30");
    }
    const GridSpec plot = opts.grid ? parse_grid(*opts.grid)
                                    : GridSpec::symmetric(tail_half_width(opts.eta), 65);

    const ScalarField psi = sample(state, plot);
    // The transform integrates over the fine default grid and is read out on the plot grid.
    const ScalarField fine = sample(state, default_grid(opts.eta));
    const ScalarField phi = fourier_numeric(fine, plot);

    const double axis_u = std::exp(opts.eta);
    const double axis_v = std::exp(-opts.eta);

    if (format == Format::csv) {
        CsvTable table({"representation", "coord_1", "coord_2", "value"});
        for (std::size_t i = 0; i < plot.n_z(); ++i) {
            for (std::size_t j = 0; j < plot.n_t(); ++j) {
                table.row().add("space_time").add(plot.z(i)).add(plot.t(j))
                    .add(psi.real()[plot.index(i, j)]);
            }
        }
        for (std::size_t i = 0; i < plot.n_z(); ++i) {
            for (std::size_t j = 0; j < plot.n_t(); ++j) {
                table.row().add("momentum_energy").add(plot.z(i)).add(plot.t(j))
                    .add(phi.modulus(plot.index(i, j)));
            }
        }
        table.row().add("ellipse_semi_axes").add(axis_u).add(axis_v).add(axis_u / axis_v);
        table.write(os);
        return kExitSuccess;
    }

    auto axis_values = [](const GridSpec& g, bool z_axis) {
        ordered_json out = ordered_json::array();
        const std::size_t count = z_axis ? g.n_z() : g.n_t();
        for (std::size_t k = 0; k < count; ++k) {
            out.push_back(round12(z_axis ? g.z(k) : g.t(k)));
        }
        return out;
    };
    auto samples = [&](auto&& value_at) {
        ordered_json out = ordered_json::array();
        for (std::size_t i = 0; i < plot.n_z(); ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t j = 0; j < plot.n_t(); ++j) {
                row.push_back(round12(value_at(plot.index(i, j))));
            }
            out.push_back(std::move(row));
        }
        return out;
    };

    ordered_json results;
    results["semi_axes"] = {{"u", round12(axis_u)}, {"v", round12(axis_v)},
                            {"ratio", round12(axis_u / axis_v)}};
    results["space_time"] = {{"z", axis_values(plot, true)},
                             {"t", axis_values(plot, false)},
                             {"psi", samples([&](std::size_t k) { return psi.real()[k]; })}};
    results["momentum_energy"] = {{"q_z", axis_values(plot, true)},
                                  {"q_0", axis_values(plot, false)},
                                  {"abs_phi", samples([&](std::size_t k) { return phi.modulus(k); })}};
    write_json(os, {{"n", opts.n}, {"eta", round12(opts.eta)}, {"grid", grid_json(plot)}},
               results,
               {{"plot_space_norm", round12(norm_squared(psi))},
                {"transform_norm", round12(norm_squared(fine))},
                {"tail_warning", phi.tail_warning}});
    return kExitSuccess;
}

//---------------------------------------------------------------------------//
int fourier_check(const FourierCheckOptions& opts, Format format, std::ostream& os)
{
    if (!std::isfinite(opts.eta)) {
        throw std::invalid_argument("fourier-check: eta must be finite");
    }
    const GridSpec space = opts.grid ? parse_grid(*opts.grid) : default_grid(opts.eta);
    const GridSpec momentum = default_momentum_grid(opts.eta);
    const FourierComparison c = compare_fourier(opts.eta, space, momentum);

    if (format == Format::csv) {
        CsvTable table({"eta", "max_abs_error", "parseval_error", "space_norm", "momentum_norm",
                        "max_imag", "central_points", "tail_warning", "passed"});
        table.row().add(opts.eta).add(c.max_abs_error).add(c.parseval_error).add(c.space_norm)
            .add(c.momentum_norm).add(c.max_imag).add(c.central_points).add(c.tail_warning)
            .add(c.passed());
        table.write(os);
    } else {
        write_json(os,
                   {{"eta", round12(opts.eta)}, {"space_grid", grid_json(space)},
                    {"momentum_grid", grid_json(momentum)}},
                   {{"passed", c.passed()},
                    {"tail_warning", c.tail_warning},
                    {"central_points", c.central_points},
                    {"space_norm", round12(c.space_norm)},
                    {"momentum_norm", round12(c.momentum_norm)}},
                   {{"max_abs_error", round12(c.max_abs_error)},
                    {"max_abs_error_tolerance", kFourierTolerance},
                    {"parseval_error", round12(c.parseval_error)},
                    {"parseval_tolerance", kParsevalTolerance},
                    {"max_imag", round12(c.max_imag)}});
    }
    return c.passed() ? kExitSuccess : kExitCheckFailed;
}

//---------------------------------------------------------------------------//
int coherence(const CoherenceOptions& opts, Format format, std::ostream& os)
{
    const double eta = rapidity_from_beam({opts.energy, opts.mass});
    const double dilation = period_dilation(eta);
    const double contraction = interaction_time_contraction(eta);
    const double ratio = coherence_ratio(eta);
    const double variance = marginal_variance(eta);

    if (format == Format::csv) {
        CsvTable table({"energy", "mass", "eta", "period_dilation",
                        "interaction_time_contraction", "coherence_ratio",
                        "marginal_variance"});
        table.row().add(opts.energy).add(opts.mass).add(eta).add(dilation).add(contraction)
            .add(ratio).add(variance);
        table.write(os);
    } else {
        write_json(os, {{"energy", round12(opts.energy)}, {"mass", round12(opts.mass)}},
                   {{"eta", round12(eta)},
                    {"period_dilation", round12(dilation)},
                    {"interaction_time_contraction", round12(contraction)},
                    {"coherence_ratio", round12(ratio)},
                    {"marginal_variance", round12(variance)}},
                   {{"ratio_identity", round12(std::abs(ratio - contraction / dilation))}});
    }
    return kExitSuccess;
}

}  // namespace wigner::cli
