#include "khplasma/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "khplasma/errors.hpp"
#include "khplasma/potential.hpp"

namespace khplasma::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NumericFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string shortest(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

// CSV cells: fixed decimals for energies and coordinates, scientific for
// small differences so they do not print as zero.
struct Cells {
    int precision;

    [[nodiscard]] std::string fixed(double v) const {
        std::ostringstream s;
        s << std::fixed << std::setprecision(precision) << v;
        return s.str();
    }
    [[nodiscard]] std::string sci(double v) const {
        std::ostringstream s;
        s << std::scientific << std::setprecision(precision) << v;
        return s.str();
    }
};

void csv_header(std::ostream& out, const RunConfig& c) {
    out << "# khplasma " << to_string(c.subcommand) << '\n';
    out << "# " << describe(c.params) << '\n';
    out << "# units=atomic third_order="
        << (c.third_order == ThirdOrderForm::tabulated ? "tabulated" : "hierarchy") << '\n';
}

json params_json(const ModelParams& p) {
    json j = {{"Z", p.Z},           {"mu", p.mu},         {"hbar", p.hbar},
              {"e_charge", p.e_charge}, {"alpha0", p.alpha0}, {"F", p.F}};
    // JSON has no infinity; an unscreened run reports null.
    j["lambda_D"] = std::isfinite(p.lambda_D) ? json(p.lambda_D) : json(nullptr);
    if (p.omega) j["omega"] = *p.omega;
    if (p.E0_amp) j["E0_amp"] = *p.E0_amp;
    return j;
}

void put_breakdown(json& j, const EnergyBreakdown& b) {
    j["e0"] = b.e0;
    j["const_shift"] = b.const_shift;
    j["e1"] = b.e1;
    j["e2"] = b.e2;
    j["e3"] = b.e3;
    j["total"] = b.total;
}

const char* kBreakdownColumns = "e0,const_shift,e1,e2,e3,total";

std::string breakdown_cells(const EnergyBreakdown& b, const Cells& f) {
    return f.fixed(b.e0) + ',' + f.fixed(b.const_shift) + ',' + f.fixed(b.e1) + ',' +
           f.fixed(b.e2) + ',' + f.fixed(b.e3) + ',' + f.fixed(b.total);
}

// --- subcommands -----------------------------------------------------------

void emit_potential(const RunConfig& c, std::ostream& out) {
    const std::vector<double> radii =
        c.radii.empty() ? SweepSpec::linear(0.05, 10.0, 200) : c.radii;
    const EffectiveCoefficients coeffs = taylor_coefficients(c.params);
    if (c.format == OutputFormat::json) {
        json j = {{"subcommand", "potential"}, {"params", params_json(c.params)}};
        j["points"] = json::array();
        for (double r : radii) {
            j["points"].push_back({{"r", r},
                                   {"potential", model_potential(r, c.params)},
                                   {"series", veff_series_eval(r, coeffs)}});
        }
        out << j.dump(2) << '\n';
        return;
    }
    const Cells f{c.precision};
    csv_header(out, c);
    out << "r,potential,series\n";
    for (double r : radii) {
        out << f.fixed(r) << ',' << f.fixed(model_potential(r, c.params)) << ','
            << f.fixed(veff_series_eval(r, coeffs)) << '\n';
    }
}

void emit_energy(const RunConfig& c, std::ostream& out) {
    const EnergyBreakdown b = total_energy(c.params, c.third_order);
    if (c.format == OutputFormat::json) {
        json j = {{"subcommand", "energy"}, {"params", params_json(c.params)}};
        put_breakdown(j, b);
        out << j.dump(2) << '\n';
        return;
    }
    csv_header(out, c);
    out << kBreakdownColumns << '\n' << breakdown_cells(b, Cells{c.precision}) << '\n';
}

void emit_oracle(const RunConfig& c, std::ostream& out) {
    const RadialGrid grid = c.grid.resolve(c.params);
    const OracleComparison cmp = compare_with_oracle(c.params, c.third_order, grid, true);
    const EnergyBreakdown b = total_energy(c.params, c.third_order);
    if (c.format == OutputFormat::json) {
        json j = {{"subcommand", "oracle"}, {"params", params_json(c.params)}};
        put_breakdown(j, b);
        j["oracle_energy"] = cmp.oracle;
        j["deviation"] = cmp.deviation;
        j["overlap"] = cmp.overlap;
        j["converged"] = cmp.converged;
        j["grid"] = {{"r_min", grid.r_min()}, {"r_max", grid.r_max()}, {"n_points", grid.n_points()}};
        out << j.dump(2) << '\n';
    } else {
        const Cells f{c.precision};
        csv_header(out, c);
        out << "# grid r_min=" << shortest(grid.r_min()) << " r_max=" << shortest(grid.r_max())
            << " n_points=" << grid.n_points() << '\n';
        out << "perturbative,oracle_energy,deviation,overlap,converged\n"
            << f.fixed(cmp.perturbative) << ',' << f.fixed(cmp.oracle) << ','
            << f.sci(cmp.deviation) << ',' << f.fixed(cmp.overlap) << ','
            << (cmp.converged ? "true" : "false") << '\n';
    }
    if (!cmp.converged) {
        throw NumericFailure("oracle did not converge (Richardson estimate above tolerance or "
                             "a node in the ground state); refine the grid with --n-points");
    }
}

void emit_sweep(const RunConfig& c, std::ostream& out) {
    const SweepRequest& s = c.sweep;
    SweepSpec spec;
    spec.vary = s.vary;
    spec.values = s.geometric ? SweepSpec::geometric(s.start, s.stop, s.count)
                              : SweepSpec::linear(s.start, s.stop, s.count);
    spec.fixed = c.params;
    spec.outputs.oracle = s.oracle;
    spec.outputs.overlap = s.overlap;
    spec.third_order = c.third_order;
    if (c.grid.any()) spec.oracle_grid = c.grid.resolve(c.params);
    spec.threads = s.threads;
    const std::vector<SweepRow> rows = run_sweep(spec);
    const std::string name(to_string(s.vary));

    if (c.format == OutputFormat::json) {
        json j = {{"subcommand", "sweep"}, {"vary", name}, {"params", params_json(c.params)}};
        j["rows"] = json::array();
        for (const SweepRow& row : rows) {
            json r = {{name, row.value}};
            put_breakdown(r, *row.breakdown);
            if (row.oracle_energy) r["oracle_energy"] = *row.oracle_energy;
            if (row.deviation) r["deviation"] = *row.deviation;
            if (row.overlap) r["overlap"] = *row.overlap;
            j["rows"].push_back(r);
        }
        out << j.dump(2) << '\n';
        return;
    }
    const Cells f{c.precision};
    csv_header(out, c);
    out << "# vary=" << name << '\n';
    out << name << ',' << kBreakdownColumns;
    if (s.oracle) out << ",oracle_energy,deviation";
    if (s.overlap) out << ",overlap";
    out << '\n';
    for (const SweepRow& row : rows) {
        out << f.fixed(row.value) << ',' << breakdown_cells(*row.breakdown, f);
        if (row.oracle_energy) out << ',' << f.fixed(*row.oracle_energy) << ',' << f.sci(*row.deviation);
        if (row.overlap) out << ',' << f.fixed(*row.overlap);
        out << '\n';
    }
}

void emit_table1(const RunConfig& c, std::ostream& out) {
    const std::vector<Table1Row> rows = regenerate_table1(c.params.alpha0);
    double worst = 0.0;
    for (const Table1Row& row : rows) worst = std::max(worst, std::abs(row.deviation));

    if (c.format == OutputFormat::json) {
        json j = {{"subcommand", "table1"}, {"alpha0", c.params.alpha0}};
        j["rows"] = json::array();
        for (const Table1Row& row : rows) {
            json r = {{"row", row.entry.row},
                      {"F", row.entry.F},
                      {"lambda_D", row.entry.lambda_D},
                      {"reference", row.entry.reference}};
            put_breakdown(r, row.computed);
            r["deviation"] = row.deviation;
            j["rows"].push_back(r);
        }
        j["max_abs_deviation"] = worst;
        out << j.dump(2) << '\n';
        return;
    }
    const Cells f{c.precision};
    out << "# khplasma table1\n# Z=1 alpha0=" << shortest(c.params.alpha0) << " units=atomic\n";
    out << "row,F,lambda_D,reference," << kBreakdownColumns << ",deviation\n";
    for (const Table1Row& row : rows) {
        out << row.entry.row << ',' << shortest(row.entry.F) << ',' << shortest(row.entry.lambda_D)
            << ',' << f.fixed(row.entry.reference) << ',' << breakdown_cells(row.computed, f) << ','
            << f.sci(row.deviation) << '\n';
    }
    out << "# max_abs_deviation=" << f.sci(worst) << '\n';
}

void emit_figure(const RunConfig& c, std::ostream& out) {
    const Dataset d = figure_dataset(c.figure);
    if (c.format == OutputFormat::json) {
        json j = {{"subcommand", "figure"},
                  {"name", d.name},
                  {"x_label", d.x_label},
                  {"y_label", d.y_label},
                  {"notes", d.notes}};
        j["points"] = json::array();
        for (const DataPoint& pt : d.points) {
            j["points"].push_back({{"series", pt.series}, {"x", pt.x}, {"y", pt.y}});
        }
        out << j.dump(2) << '\n';
        return;
    }
    const Cells f{c.precision};
    out << "# khplasma figure " << d.name << '\n';
    for (const std::string& note : d.notes) out << "# " << note << '\n';
    out << "series," << d.x_label << ',' << d.y_label << '\n';
    for (const DataPoint& pt : d.points) {
        out << '"' << pt.series << "\"," << f.fixed(pt.x) << ',' << f.fixed(pt.y) << '\n';
    }
}

void emit(const RunConfig& c, std::ostream& out) {
    switch (c.subcommand) {
        case Subcommand::potential: return emit_potential(c, out);
        case Subcommand::energy: return emit_energy(c, out);
        case Subcommand::oracle: return emit_oracle(c, out);
        case Subcommand::sweep: return emit_sweep(c, out);
        case Subcommand::table1: return emit_table1(c, out);
        case Subcommand::figure: return emit_figure(c, out);
    }
}

}  // namespace

std::string_view to_string(Subcommand s) {
    switch (s) {
        case Subcommand::potential: return "potential";
        case Subcommand::energy: return "energy";
        case Subcommand::oracle: return "oracle";
        case Subcommand::sweep: return "sweep";
        case Subcommand::table1: return "table1";
        case Subcommand::figure: return "figure";
    }
    return "?";
}

RadialGrid GridOverrides::resolve(const ModelParams& p) const {
    const RadialGrid base = default_grid(p);
    return RadialGrid(r_min.value_or(base.r_min()), r_max.value_or(base.r_max()),
                      n_points.value_or(base.n_points()));
}

std::variant<RunConfig, ParseStop> parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Bound-state energy of a laser-dressed, plasma-screened hydrogen atom in a "
                 "static field (atomic units).",
                 "khplasma"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.set_config("--config", "", "key=value file (one per line, # comments); flags override it");
    app.allow_config_extras(false);

    std::optional<double> z, lambda, alpha0, field, omega, e0_amp, r_min, r_max;
    std::optional<std::size_t> n_points;
    std::string format = "csv";
    std::optional<std::string> output;
    int precision = 7;
    std::string third = "tabulated";

    app.add_option("--z", z, "nuclear charge Z (default 1)");
    app.add_option("--lambda-d", lambda, "Debye screening length lambda_D");
    app.add_option("--alpha0", alpha0, "laser-dressing amplitude alpha0 (default 1e-4)");
    app.add_option("--field", field, "static field strength F");
    app.add_option("--omega", omega, "laser frequency; with --e0-amp derives alpha0");
    app.add_option("--e0-amp", e0_amp, "laser field amplitude; with --omega derives alpha0");
    app.add_option("--r-min", r_min, "oracle grid left boundary");
    app.add_option("--r-max", r_max, "oracle grid right boundary");
    app.add_option("--n-points", n_points, "oracle grid interior nodes");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output,-o", output, "output file (standard output when omitted)");
    app.add_option("--precision", precision, "decimal places in CSV output")
        ->check(CLI::Range(1, 17));
    app.add_option("--third-order", third, "tabulated or hierarchy")
        ->check(CLI::IsMember({"tabulated", "hierarchy"}));

    RunConfig config;

    auto* potential = app.add_subcommand("potential", "model potential and its expansion vs r");
    potential->add_option("--r", config.radii, "radii, comma separated (default 200 in [0.05, 10])")
        ->delimiter(',');
    app.add_subcommand("energy", "perturbative energy breakdown");
    app.add_subcommand("oracle", "perturbative energy vs the finite-difference eigensolver");
    auto* sweep = app.add_subcommand("sweep", "energy over a range of one parameter");
    std::string vary;
    sweep->add_option("--vary", vary, "F, lambda-d or alpha0")->required();
    sweep->add_option("--start", config.sweep.start, "first value")->required();
    sweep->add_option("--stop", config.sweep.stop, "last value")->required();
    sweep->add_option("--count", config.sweep.count, "number of values")
        ->required()
        ->check(CLI::PositiveNumber);
    sweep->add_flag("--geometric", config.sweep.geometric, "geometric spacing");
    sweep->add_flag("--oracle", config.sweep.oracle, "add oracle energy and deviation columns");
    sweep->add_flag("--overlap", config.sweep.overlap, "add wavefunction overlap column");
    sweep->add_option("--threads", config.sweep.threads, "worker threads (0 = all cores)");
    app.add_subcommand("table1", "regenerate the reference energy table");
    auto* figure = app.add_subcommand("figure", "dataset behind a figure");
    figure->add_option("tag", config.figure, "fig1a, fig1b, fig1c, fig2a, fig2b, fig2c or fig2d")
        ->required()
        ->check(CLI::IsMember(figure_tags()));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = app.exit(e, out, err);
        if (code == 0) return ParseStop{out.str(), kExitOk};
        return ParseStop{err.str(), kExitUsage};
    }

    for (auto* sub : app.get_subcommands()) {
        for (Subcommand s : {Subcommand::potential, Subcommand::energy, Subcommand::oracle,
                             Subcommand::sweep, Subcommand::table1, Subcommand::figure}) {
            if (sub->get_name() == to_string(s)) config.subcommand = s;
        }
    }

    const auto usage = [](const std::string& message) {
        return ParseStop{"error: " + message + "\nRun with --help for more information.\n",
                         kExitUsage};
    };

    try {
        if (alpha0 && (omega || e0_amp)) {
            throw UsageError("give alpha0 either directly (--alpha0) or through the laser "
                             "(--omega with --e0-amp), not both");
        }
        if (omega.has_value() != e0_amp.has_value()) {
            throw UsageError(omega ? "--omega needs --e0-amp" : "--e0-amp needs --omega");
        }
        ModelParams& p = config.params;
        if (z) p.Z = *z;
        if (lambda) p.lambda_D = *lambda;
        if (field) p.F = *field;
        if (alpha0) p.alpha0 = *alpha0;
        if (omega) p = p.with_laser(*omega, *e0_amp);
        p.validate();

        if (config.subcommand == Subcommand::sweep) {
            config.sweep.vary = parse_sweep_parameter(vary);
        }
        const bool needs_both = config.subcommand == Subcommand::potential ||
                                config.subcommand == Subcommand::energy ||
                                config.subcommand == Subcommand::oracle;
        const bool sweep_mode = config.subcommand == Subcommand::sweep;
        if ((needs_both || (sweep_mode && config.sweep.vary != SweepParameter::lambda_D)) &&
            !lambda) {
            throw UsageError("missing required parameter lambda_D (--lambda-d)");
        }
        if ((needs_both || (sweep_mode && config.sweep.vary != SweepParameter::F)) && !field) {
            throw UsageError("missing required parameter F (--field)");
        }
        if (sweep_mode && config.sweep.vary == SweepParameter::alpha0 && (omega || e0_amp)) {
            throw UsageError("alpha0 is swept; drop --omega/--e0-amp");
        }
        for (double r : config.radii) {
            if (!(r > p.alpha0)) {
                throw UsageError("--r values must exceed alpha0 (got " + shortest(r) + ")");
            }
        }
    } catch (const UsageError& e) {
        return usage(e.what());
    } catch (const InputError& e) {
        return usage(e.what());
    }

    config.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
    config.output_path = output;
    config.precision = precision;
    config.third_order = third == "hierarchy" ? ThirdOrderForm::hierarchy : ThirdOrderForm::tabulated;
    config.grid = {r_min, r_max, n_points};
    return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::ostringstream buffer;
    int status = kExitOk;
    try {
        emit(config, buffer);
    } catch (const NumericFailure& e) {
        err << "khplasma: " << e.what() << '\n';
        status = kExitNumeric;
    } catch (const InputError& e) {
        err << "khplasma: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "khplasma: " << e.what() << '\n';
        return kExitNumeric;
    }

    if (!config.output_path) {
        out << buffer.str();
        out.flush();
        return status;
    }
    std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
    if (file) file << buffer.str();
    if (file) file.close();
    if (!file) {
        err << "khplasma: cannot write output file '" << *config.output_path << "'\n";
        return kExitIo;
    }
    return status;
}

}  // namespace khplasma::cli
