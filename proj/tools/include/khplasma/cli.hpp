#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "khplasma/model_params.hpp"
#include "khplasma/perturbation.hpp"
#include "khplasma/sweep.hpp"

namespace khplasma::cli {

enum class Subcommand { potential, energy, oracle, sweep, table1, figure };
enum class OutputFormat { csv, json };

std::string_view to_string(Subcommand s);

/// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kExitIo = 4;

struct GridOverrides {
    std::optional<double> r_min;
    std::optional<double> r_max;
    std::optional<std::size_t> n_points;

    [[nodiscard]] bool any() const { return r_min || r_max || n_points; }
    /// Fills unset fields from default_grid(p).
    [[nodiscard]] RadialGrid resolve(const ModelParams& p) const;
};

struct SweepRequest {
    SweepParameter vary = SweepParameter::F;
    double start = 0.0;
    double stop = 0.0;
    std::size_t count = 0;
    bool geometric = false;
    bool oracle = false;
    bool overlap = false;
    std::size_t threads = 1;
};

struct RunConfig {
    Subcommand subcommand = Subcommand::energy;
    ModelParams params;
    OutputFormat format = OutputFormat::csv;
    std::optional<std::string> output_path;  ///< standard output when unset
    GridOverrides grid;
    int precision = 7;
    ThirdOrderForm third_order = ThirdOrderForm::tabulated;

    std::vector<double> radii;  ///< potential
    SweepRequest sweep;         ///< sweep
    std::string figure;         ///< figure tag
};

/// Help or usage failure: text to print and the exit status.
struct ParseStop {
    std::string message;
    int exit_code = kExitUsage;
};

/// args excludes the program name.
std::variant<RunConfig, ParseStop> parse_args(const std::vector<std::string>& args);

/// Writes the result to config.output_path or `out`; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace khplasma::cli
