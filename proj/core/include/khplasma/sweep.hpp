#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "khplasma/model_params.hpp"
#include "khplasma/oracle.hpp"
#include "khplasma/perturbation.hpp"

namespace khplasma {

enum class SweepParameter { F, lambda_D, alpha0 };

std::string_view to_string(SweepParameter which);
/// Accepts "F", "field", "lambda_D", "lambda-d", "alpha0". Throws InputError otherwise.
SweepParameter parse_sweep_parameter(std::string_view text);

/// Output selection for a sweep. Oracle columns dominate runtime and are off by default.
struct SweepOutputs {
    bool breakdown = true;
    bool oracle = false;
    bool overlap = false;
    std::vector<double> potential_r;  ///< sample the model potential at these radii when non-empty
};

struct SweepSpec {
    SweepParameter vary = SweepParameter::F;
    std::vector<double> values;
    ModelParams fixed;
    SweepOutputs outputs;
    ThirdOrderForm third_order = ThirdOrderForm::tabulated;
    std::optional<RadialGrid> oracle_grid;  ///< default_grid(row params) when unset
    std::size_t threads = 1;                ///< 0 = hardware concurrency

    /// start, stop inclusive; count >= 1 (count == 1 gives {start}).
    static std::vector<double> linear(double start, double stop, std::size_t count);
    static std::vector<double> geometric(double start, double stop, std::size_t count);
};

struct SweepRow {
    double value = 0.0;
    std::optional<EnergyBreakdown> breakdown;
    std::optional<double> oracle_energy;
    std::optional<double> deviation;  ///< |E_pert - E_oracle|
    std::optional<double> overlap;
    std::vector<double> potential_samples;
};

/// One row per value, in input order. Throws InputError naming the offending value.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Copy of `base` with the swept field set to `value`.
ModelParams apply_sweep_value(const ModelParams& base, SweepParameter which, double value);

/// Grid (1e-4, 40/sigma] with 8000 interior nodes, used to compare the perturbative
/// wavefunction with the oracle eigenvector. The moderating exponent is a cubic in r
/// and grows without bound when c2 < 0, so the comparison stays inside this window.
RadialGrid wavefunction_grid(const ModelParams& p);

/// Oracle on the truncated expansion potential and overlap with wavefunction_eval.
struct OracleComparison {
    double perturbative = 0.0;
    double oracle = 0.0;
    double deviation = 0.0;
    double overlap = 0.0;
    bool converged = false;
};

OracleComparison compare_with_oracle(const ModelParams& p,
                                     ThirdOrderForm form = ThirdOrderForm::tabulated,
                                     std::optional<RadialGrid> grid = std::nullopt,
                                     bool with_overlap = true);

// ---------------------------------------------------------------------------
// Reference energy table

struct Table1Entry {
    std::string row;  ///< "F" (lambda_D = 100) or "lambda_D" (F = 0.01)
    double F = 0.0;
    double lambda_D = 0.0;
    double reference = 0.0;
};

/// The twelve tabulated energies, alpha0 = 1e-4, Z = 1.
const std::vector<Table1Entry>& table1_reference();

struct Table1Row {
    Table1Entry entry;
    EnergyBreakdown computed;
    double deviation = 0.0;  ///< computed.total - reference
};

std::vector<Table1Row> regenerate_table1(double alpha0 = 1e-4);

// ---------------------------------------------------------------------------
// Figure datasets

struct DataPoint {
    double x = 0.0;
    double y = 0.0;
    std::string series;
};

struct Dataset {
    std::string name;
    std::string x_label;
    std::string y_label;
    std::vector<std::string> notes;  ///< fixed parameters and axis choices, one per line
    std::vector<DataPoint> points;

    /// Points of one series in emission order.
    [[nodiscard]] std::vector<DataPoint> series(std::string_view label) const;
    [[nodiscard]] std::vector<std::string> series_labels() const;
};

const std::vector<std::string>& figure_tags();

/// fig1a, fig1b, fig1c, fig2a, fig2b, fig2c, fig2d. Throws InputError for other tags.
Dataset figure_dataset(std::string_view which);

}  // namespace khplasma
