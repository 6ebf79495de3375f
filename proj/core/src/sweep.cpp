#include "khplasma/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "khplasma/errors.hpp"
#include "khplasma/potential.hpp"

namespace khplasma {

std::string_view to_string(SweepParameter which) {
    switch (which) {
        case SweepParameter::F:
            return "F";
        case SweepParameter::lambda_D:
            return "lambda_D";
        case SweepParameter::alpha0:
            return "alpha0";
    }
    return "?";
}

SweepParameter parse_sweep_parameter(std::string_view text) {
    if (text == "F" || text == "field") return SweepParameter::F;
    if (text == "lambda_D" || text == "lambda-d" || text == "lambda_d") return SweepParameter::lambda_D;
    if (text == "alpha0") return SweepParameter::alpha0;
    throw InputError("unknown sweep parameter '" + std::string(text) +
                     "' (expected F, lambda_D or alpha0)");
}

std::vector<double> SweepSpec::linear(double start, double stop, std::size_t count) {
    if (count == 0) throw InputError("linear range: count must be >= 1");
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = start;
        return out;
    }
    const double step = (stop - start) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) out[i] = start + step * static_cast<double>(i);
    out.back() = stop;
    return out;
}

std::vector<double> SweepSpec::geometric(double start, double stop, std::size_t count) {
    if (count == 0) throw InputError("geometric range: count must be >= 1");
    if (!(start > 0.0) || !(stop > 0.0)) {
        throw InputError("geometric range: endpoints must be > 0");
    }
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = start;
        return out;
    }
    const double ratio = std::log(stop / start) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) out[i] = start * std::exp(ratio * static_cast<double>(i));
    out.front() = start;
    out.back() = stop;
    return out;
}

ModelParams apply_sweep_value(const ModelParams& base, SweepParameter which, double value) {
    switch (which) {
        case SweepParameter::F:
            return base.with_F(value);
        case SweepParameter::lambda_D:
            return base.with_lambda_D(value);
        case SweepParameter::alpha0:
            return base.with_alpha0(value);
    }
    return base;
}

RadialGrid wavefunction_grid(const ModelParams& p) {
    return RadialGrid(1e-4, 40.0 / p.sigma(), 8000);
}

OracleComparison compare_with_oracle(const ModelParams& p, ThirdOrderForm form,
                                     std::optional<RadialGrid> grid, bool with_overlap) {
    const EffectiveCoefficients c = taylor_coefficients(p);
    const auto truncated = [c](double r) { return veff_series_eval(r, c); };

    OracleComparison out;
    out.perturbative = total_energy(p, form).total;
    const OracleResult solved = solve_ground_state(truncated, grid.value_or(default_grid(p)), p);
    out.oracle = solved.energy;
    out.deviation = std::abs(out.perturbative - out.oracle);
    out.converged = solved.converged;
    if (with_overlap) {
        const RadialGrid window = wavefunction_grid(p);
        const OracleResult local = solve_ground_state(truncated, window, p);
        out.overlap = overlap(local, [&p](double r) { return wavefunction_eval(r, p); }, window);
        out.converged = out.converged && local.converged;
    }
    return out;
}

namespace {

void check_spec(const SweepSpec& spec) {
    if (spec.values.empty()) throw InputError("sweep: no values to sweep");
    if (spec.values.size() > 1) {
        const bool increasing = spec.values[1] > spec.values[0];
        for (std::size_t i = 1; i < spec.values.size(); ++i) {
            const bool ok = increasing ? spec.values[i] > spec.values[i - 1]
                                       : spec.values[i] < spec.values[i - 1];
            if (!ok) {
                std::ostringstream msg;
                msg << "sweep: values must be strictly monotone (" << to_string(spec.vary)
                    << " = " << spec.values[i] << " breaks the order)";
                throw InputError(msg.str());
            }
        }
    }
    for (double v : spec.values) {
        try {
            apply_sweep_value(spec.fixed, spec.vary, v).validate();
        } catch (const InputError& e) {
            std::ostringstream msg;
            msg << "sweep: " << to_string(spec.vary) << " = " << v << " is invalid: " << e.what();
            throw InputError(msg.str());
        }
    }
}

SweepRow compute_row(const SweepSpec& spec, double value) {
    const ModelParams p = apply_sweep_value(spec.fixed, spec.vary, value);
    SweepRow row;
    row.value = value;
    if (spec.outputs.breakdown) row.breakdown = total_energy(p, spec.third_order);
    if (spec.outputs.oracle || spec.outputs.overlap) {
        const OracleComparison cmp =
            compare_with_oracle(p, spec.third_order, spec.oracle_grid, spec.outputs.overlap);
        if (spec.outputs.oracle) {
            row.oracle_energy = cmp.oracle;
            row.deviation = cmp.deviation;
        }
        if (spec.outputs.overlap) row.overlap = cmp.overlap;
    }
    row.potential_samples.reserve(spec.outputs.potential_r.size());
    for (double r : spec.outputs.potential_r) row.potential_samples.push_back(model_potential(r, p));
    return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    check_spec(spec);
    const std::size_t n = spec.values.size();
    std::vector<SweepRow> rows(n);
    std::vector<std::exception_ptr> failures(n);

    std::size_t workers = spec.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                            : spec.threads;
    workers = std::min(workers, n);

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                rows[i] = compute_row(spec, spec.values[i]);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
    }
    for (const auto& failure : failures) {
        if (failure) std::rethrow_exception(failure);
    }
    return rows;
}

}  // namespace khplasma
