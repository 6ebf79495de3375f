#include <algorithm>
#include <sstream>

#include "khplasma/errors.hpp"
#include "khplasma/potential.hpp"
#include "khplasma/sweep.hpp"

namespace khplasma {

namespace {

std::string label(std::initializer_list<std::pair<const char*, double>> parts) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [name, value] : parts) {
        if (!first) out << ' ';
        out << name << '=' << value;
        first = false;
    }
    return out.str();
}

constexpr double kFigure1Alpha0 = 0.001;
constexpr double kFigure2Alpha0 = 0.0001;

// Potential curves: r in [0.05, 10], well clear of the r = alpha0 pole.
std::vector<double> potential_radii() { return SweepSpec::linear(0.05, 10.0, 200); }

void add_potential_curve(Dataset& d, const ModelParams& p, const std::string& series) {
    for (double r : potential_radii()) d.points.push_back({r, model_potential(r, p), series});
}

void add_energy_curve(Dataset& d, const ModelParams& base, SweepParameter vary,
                      const std::vector<double>& values, const std::string& series) {
    for (double v : values) {
        d.points.push_back({v, total_energy(apply_sweep_value(base, vary, v)).total, series});
    }
}

Dataset fig1a() {
    Dataset d{"fig1a", "r", "V(r)", {}, {}};
    d.notes = {"model potential dressed_pair + F r vs r", "alpha0=0.001",
               "F in {0.4, 1.2}; lambda_D in {1, 2, 5, 10}",
               "r in [0.05, 10], 200 linear points (axis range chosen to bracket the curves)"};
    for (double lambda : {1.0, 2.0, 5.0, 10.0}) {
        for (double F : {0.4, 1.2}) {
            add_potential_curve(d, ModelParams::hydrogen(lambda, F, kFigure1Alpha0),
                                label({{"F", F}, {"lambda_D", lambda}}));
        }
    }
    return d;
}

Dataset fig1b() {
    Dataset d{"fig1b", "r", "V(r)", {}, {}};
    d.notes = {"model potential dressed_pair + F r vs r", "alpha0=0.001",
               "lambda_D in {1, 100}; F in {0.1, 0.4, 0.8, 1.2}",
               "r in [0.05, 10], 200 linear points (axis range chosen to bracket the curves)"};
    for (double lambda : {1.0, 100.0}) {
        for (double F : {0.1, 0.4, 0.8, 1.2}) {
            add_potential_curve(d, ModelParams::hydrogen(lambda, F, kFigure1Alpha0),
                                label({{"F", F}, {"lambda_D", lambda}}));
        }
    }
    return d;
}

Dataset fig1c() {
    Dataset d{"fig1c", "r", "V(r)", {}, {}};
    d.notes = {"exact model potential vs its small-r expansion", "alpha0=0.001",
               "F in {0.1, 10}; lambda_D in {1, 10}",
               "r in [0.05, 10], 200 linear points (axis range chosen to bracket the curves)"};
    for (double lambda : {1.0, 10.0}) {
        for (double F : {0.1, 10.0}) {
            const ModelParams p = ModelParams::hydrogen(lambda, F, kFigure1Alpha0);
            const EffectiveCoefficients c = taylor_coefficients(p);
            const std::string tag = label({{"F", F}, {"lambda_D", lambda}});
            add_potential_curve(d, p, "exact " + tag);
            for (double r : potential_radii()) {
                d.points.push_back({r, veff_series_eval(r, c), "series " + tag});
            }
        }
    }
    return d;
}

Dataset fig2_alpha(const char* name, double lambda) {
    Dataset d{name, "alpha0", "E_KH", {}, {}};
    d.notes = {"energy vs laser-dressing parameter", label({{"lambda_D", lambda}}),
               "F in {0.1, 0.5, 1}",
               "alpha0 in [0, 0.5], 101 linear points (axis range chosen to bracket the shift onset)"};
    const auto alphas = SweepSpec::linear(0.0, 0.5, 101);
    for (double F : {0.1, 0.5, 1.0}) {
        add_energy_curve(d, ModelParams::hydrogen(lambda, F), SweepParameter::alpha0, alphas,
                         label({{"F", F}}));
    }
    return d;
}

Dataset fig2c() {
    Dataset d{"fig2c", "F", "E_KH", {}, {}};
    d.notes = {"energy vs field strength", "alpha0=0.0001", "lambda_D in {5, 10, 20, 50, 100}",
               "F in [0, 1], 101 linear points (axis range chosen to bracket the curves)"};
    const auto fields = SweepSpec::linear(0.0, 1.0, 101);
    for (double lambda : {5.0, 10.0, 20.0, 50.0, 100.0}) {
        add_energy_curve(d, ModelParams::hydrogen(lambda, 0.0, kFigure2Alpha0), SweepParameter::F,
                         fields, label({{"lambda_D", lambda}}));
    }
    return d;
}

Dataset fig2d() {
    Dataset d{"fig2d", "lambda_D", "E_KH", {}, {}};
    d.notes = {"energy vs Debye length", "alpha0=0.0001", "F in {0.01, 0.1, 0.5, 1}",
               "lambda_D in [2, 100], 99 linear points (axis range chosen to bracket the knee near 25)"};
    const auto lambdas = SweepSpec::linear(2.0, 100.0, 99);
    for (double F : {0.01, 0.1, 0.5, 1.0}) {
        add_energy_curve(d, ModelParams::hydrogen(2.0, F, kFigure2Alpha0),
                         SweepParameter::lambda_D, lambdas, label({{"F", F}}));
    }
    return d;
}

}  // namespace

std::vector<DataPoint> Dataset::series(std::string_view wanted) const {
    std::vector<DataPoint> out;
    for (const DataPoint& pt : points) {
        if (pt.series == wanted) out.push_back(pt);
    }
    return out;
}

std::vector<std::string> Dataset::series_labels() const {
    std::vector<std::string> labels;
    for (const DataPoint& pt : points) {
        if (std::find(labels.begin(), labels.end(), pt.series) == labels.end()) {
            labels.push_back(pt.series);
        }
    }
    return labels;
}

const std::vector<std::string>& figure_tags() {
    static const std::vector<std::string> tags = {"fig1a", "fig1b", "fig1c", "fig2a",
                                                  "fig2b", "fig2c", "fig2d"};
    return tags;
}

Dataset figure_dataset(std::string_view which) {
    if (which == "fig1a") return fig1a();
    if (which == "fig1b") return fig1b();
    if (which == "fig1c") return fig1c();
    if (which == "fig2a") return fig2_alpha("fig2a", 1.0);
    if (which == "fig2b") return fig2_alpha("fig2b", 4.0);
    if (which == "fig2c") return fig2c();
    if (which == "fig2d") return fig2d();
    throw InputError("unknown figure '" + std::string(which) +
                     "' (expected fig1a, fig1b, fig1c, fig2a, fig2b, fig2c, fig2d)");
}

}  // namespace khplasma
