#include "khplasma/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "khplasma/errors.hpp"
#include "khplasma/tridiagonal.hpp"

namespace khplasma {

namespace {

// Finite-difference Hamiltonian as a symmetric tridiagonal pencil T u = E M u with
// M = diag(first_mass, 1, ..., 1), stored already reduced to M^{-1/2} T M^{-1/2}.
struct ReducedPencil {
    SymmetricTridiagonal matrix;
    double first_mass = 1.0;
};

ReducedPencil build_pencil(const RadialFunction& potential, const RadialGrid& grid,
                           const ModelParams& p, LeftBoundary left) {
    const std::size_t n = grid.n_points();
    const double h = grid.spacing();
    const double kinetic = p.hbar * p.hbar / (2.0 * p.mu);

    ReducedPencil pencil;
    pencil.matrix.diagonal.resize(n);
    pencil.matrix.off_diagonal.assign(n - 1, -kinetic / (h * h));
    for (std::size_t i = 0; i < n; ++i) {
        const double r = grid.point(i);
        const double v = potential(r);
        if (!std::isfinite(v)) {
            std::ostringstream msg;
            msg << "oracle: potential is not finite at r = " << r;
            throw InputError(msg.str());
        }
        pencil.matrix.diagonal[i] = 2.0 * kinetic / (h * h) + v;
    }

    if (left == LeftBoundary::origin) {
        // First interval runs from the origin (u = 0) to r_1 = a. The row of the
        // non-uniform stencil, scaled by w = (a + h) / 2h, has the uniform off-diagonal.
        const double a = grid.point(0);
        const double w = (a + h) / (2.0 * h);
        pencil.first_mass = w;
        pencil.matrix.diagonal[0] = 2.0 * kinetic / (a * h) + potential(a);
        if (n > 1) pencil.matrix.off_diagonal[0] /= std::sqrt(w);
    }
    return pencil;
}

}  // namespace

RadialGrid::RadialGrid(double r_min, double r_max, std::size_t n_points)
    : r_min_(r_min), r_max_(r_max), n_points_(n_points), h_(0.0) {
    if (!(r_min > 0.0) || !(r_max > r_min) || !std::isfinite(r_max)) {
        std::ostringstream msg;
        msg << "RadialGrid: need 0 < r_min < r_max (got " << r_min << ", " << r_max << ")";
        throw InputError(msg.str());
    }
    if (n_points < 100) {
        throw InputError("RadialGrid: n_points must be >= 100");
    }
    h_ = (r_max - r_min) / static_cast<double>(n_points + 1);
}

std::vector<double> RadialGrid::points() const {
    std::vector<double> out(n_points_);
    for (std::size_t i = 0; i < n_points_; ++i) out[i] = point(i);
    return out;
}

RadialGrid RadialGrid::refined() const { return RadialGrid(r_min_, r_max_, 2 * n_points_ + 1); }

RadialGrid default_grid(const ModelParams& p) {
    return RadialGrid(1e-4, std::max(20.0 / p.sigma(), 50.0), 8000);
}

double OracleResult::interpolate(double r) const {
    if (!(r > grid.r_min()) || !(r < grid.r_max())) return 0.0;
    const double h = grid.spacing();
    const double s = (r - grid.r_min()) / h;  // node index in 1..n, fractional
    const auto k = static_cast<std::size_t>(std::floor(s));
    const double t = s - static_cast<double>(k);
    auto sample = [&](std::size_t node) {
        return (node == 0 || node > u_samples.size()) ? 0.0 : u_samples[node - 1];
    };
    return (1.0 - t) * sample(k) + t * sample(k + 1);
}

DiscreteGroundState discrete_ground_state(const RadialFunction& potential, const RadialGrid& grid,
                                          const ModelParams& p, const OracleOptions& options) {
    p.validate();
    const ReducedPencil pencil = build_pencil(potential, grid, p, options.left);
    Eigenpair pair = lowest_eigenpair(pencil.matrix);

    DiscreteGroundState out;
    out.energy = pair.value;
    out.u = std::move(pair.vector);
    out.u[0] /= std::sqrt(pencil.first_mass);

    double norm = 0.0;
    for (double v : out.u) norm += v * v;
    norm = std::sqrt(norm * grid.spacing());
    double peak = 0.0;
    for (double& v : out.u) {
        v /= norm;
        peak = std::max(peak, std::abs(v));
    }
    out.sign_changes = count_sign_changes(out.u, 1e-10 * peak);
    return out;
}

OracleResult solve_ground_state(const RadialFunction& potential, const RadialGrid& grid,
                                const ModelParams& p, const OracleOptions& options) {
    const DiscreteGroundState coarse = discrete_ground_state(potential, grid, p, options);
    const DiscreteGroundState fine = discrete_ground_state(potential, grid.refined(), p, options);

    OracleResult result{.grid = grid, .u_samples = {}};
    result.energy_coarse = coarse.energy;
    result.energy_fine = fine.energy;
    result.energy = (4.0 * fine.energy - coarse.energy) / 3.0;
    result.error_estimate = std::abs(fine.energy - coarse.energy) / 3.0;
    result.nodeless = coarse.sign_changes == 0 && fine.sign_changes == 0;
    result.converged = result.nodeless && std::isfinite(result.energy) &&
                       result.error_estimate <= options.tolerance;
    result.u_samples = coarse.u;
    return result;
}

double overlap(const OracleResult& u, const RadialFunction& psi, const RadialGrid& grid) {
    if (!(u.grid == grid) || u.u_samples.size() != grid.n_points()) {
        throw InputError("overlap: oracle result was computed on a different grid");
    }
    const double h = grid.spacing();
    double dot = 0.0;
    double norm2 = 0.0;
    for (std::size_t i = 0; i < grid.n_points(); ++i) {
        const double v = psi(grid.point(i));
        if (!std::isfinite(v)) {
            std::ostringstream msg;
            msg << "overlap: psi is not finite at r = " << grid.point(i);
            throw InputError(msg.str());
        }
        dot += u.u_samples[i] * v;
        norm2 += v * v;
    }
    if (!(norm2 > 0.0)) throw InputError("overlap: psi has zero norm on the grid");
    return std::abs(dot * h) / std::sqrt(norm2 * h);
}

double rayleigh_quotient(const RadialFunction& potential, const RadialFunction& trial,
                         const RadialGrid& grid, const ModelParams& p) {
    const ReducedPencil pencil = build_pencil(potential, grid, p, LeftBoundary::origin);
    const std::size_t n = grid.n_points();
    // Work in the reduced basis y = M^{1/2} u.
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = trial(grid.point(i));
    y[0] *= std::sqrt(pencil.first_mass);

    const auto& d = pencil.matrix.diagonal;
    const auto& e = pencil.matrix.off_diagonal;
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        num += d[i] * y[i] * y[i];
        if (i + 1 < n) num += 2.0 * e[i] * y[i] * y[i + 1];
        den += y[i] * y[i];
    }
    if (!(den > 0.0)) throw InputError("rayleigh_quotient: zero trial function");
    return num / den;
}

}  // namespace khplasma
