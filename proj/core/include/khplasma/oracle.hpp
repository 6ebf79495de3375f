#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "khplasma/model_params.hpp"

namespace khplasma {

/// Uniform radial mesh. r_min and r_max are the boundary nodes; the n_points
/// interior nodes are r_k = r_min + k h, k = 1..n_points, h = (r_max - r_min)/(n_points + 1).
class RadialGrid {
public:
    RadialGrid(double r_min, double r_max, std::size_t n_points);

    [[nodiscard]] double r_min() const noexcept { return r_min_; }
    [[nodiscard]] double r_max() const noexcept { return r_max_; }
    [[nodiscard]] std::size_t n_points() const noexcept { return n_points_; }
    [[nodiscard]] double spacing() const noexcept { return h_; }

    /// Interior node i = 0..n_points-1, i.e. r_{i+1}.
    [[nodiscard]] double point(std::size_t i) const noexcept {
        return r_min_ + static_cast<double>(i + 1) * h_;
    }
    [[nodiscard]] std::vector<double> points() const;

    /// Same interval with half the spacing (2 n + 1 interior nodes).
    [[nodiscard]] RadialGrid refined() const;

    bool operator==(const RadialGrid&) const = default;

private:
    double r_min_;
    double r_max_;
    std::size_t n_points_;
    double h_;
};

/// r_min = 1e-4, r_max = max(20/sigma, 50), 8000 interior nodes.
RadialGrid default_grid(const ModelParams& p);

enum class LeftBoundary {
    /// u(0) = 0 at the true origin; the first interval [0, r_1] is non-uniform and the
    /// potential is never sampled below r_1. Default for Coulomb-type cores.
    origin,
    /// u(r_min) = 0. Use when the potential is singular at some 0 < r < r_min
    /// (the exact dressed potential with r_min > alpha0).
    wall_at_r_min,
};

struct OracleOptions {
    LeftBoundary left = LeftBoundary::origin;
    /// Upper bound on the Richardson error estimate for `converged`.
    double tolerance = 1e-4;
};

/// Single discretization: lowest eigenvalue and normalized eigenvector (sum u^2 h = 1).
struct DiscreteGroundState {
    double energy = 0.0;
    std::vector<double> u;
    std::size_t sign_changes = 0;
};

struct OracleResult {
    double energy = 0.0;          ///< Richardson-extrapolated (4 E(h/2) - E(h)) / 3.
    double energy_coarse = 0.0;   ///< E(h)
    double energy_fine = 0.0;     ///< E(h/2)
    double error_estimate = 0.0;  ///< |E(h/2) - E(h)| / 3
    bool nodeless = true;
    bool converged = false;       ///< nodeless and error_estimate <= tolerance
    RadialGrid grid;
    std::vector<double> u_samples;  ///< on `grid`, sum u_k^2 h = 1, positive

    /// Piecewise-linear interpolant of u_samples; zero outside [r_min, r_max].
    [[nodiscard]] double interpolate(double r) const;
};

using RadialFunction = std::function<double(double)>;

DiscreteGroundState discrete_ground_state(const RadialFunction& potential, const RadialGrid& grid,
                                          const ModelParams& p, const OracleOptions& options = {});

/// Ground state of -(hbar^2/2mu) u'' + V u = E u, solved at h and h/2.
/// Throws InputError when the potential is non-finite at a node.
OracleResult solve_ground_state(const RadialFunction& potential, const RadialGrid& grid,
                                const ModelParams& p, const OracleOptions& options = {});

/// |sum u_k psi_hat(r_k) h| with psi_hat normalized on the same grid.
/// Throws InputError for a zero-norm or non-finite psi or a grid mismatch.
double overlap(const OracleResult& u, const RadialFunction& psi, const RadialGrid& grid);

/// Rayleigh quotient of a trial function on the grid with the same discretization
/// (origin boundary). Bounded below by the discrete ground-state energy.
double rayleigh_quotient(const RadialFunction& potential, const RadialFunction& trial,
                         const RadialGrid& grid, const ModelParams& p);

}  // namespace khplasma
