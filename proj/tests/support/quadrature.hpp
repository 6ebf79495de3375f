#pragma once

// Test-side numerical oracles. Nothing here calls into the perturbation closed forms.

#include <cmath>
#include <functional>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "khplasma/model_params.hpp"

namespace khplasma::testing {

/// Adaptive Gauss-Kronrod (61 points) to the given relative tolerance.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-13) {
    double error = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, rel_tol,
                                                                          &error);
}

/// Unperturbed ground state written out from scratch: 2 s^{3/2} r exp(-s r), s = 2 mu A / hbar^2.
inline double ground_state(double r, const ModelParams& p) {
    const double s = 2.0 * p.mu * p.Z * p.e_charge * p.e_charge / (p.hbar * p.hbar);
    return 2.0 * std::pow(s, 1.5) * r * std::exp(-s * r);
}

/// integral_0^{40/sigma} X0(r)^2 f(r) dr; the neglected tail is below e^{-80}.
inline double ground_state_expectation(const std::function<double(double)>& f,
                                       const ModelParams& p, double rel_tol = 1e-13) {
    const double s = 2.0 * p.mu * p.Z * p.e_charge * p.e_charge / (p.hbar * p.hbar);
    return integrate(
        [&](double r) {
            const double x0 = ground_state(r, p);
            return x0 * x0 * f(r);
        },
        0.0, 40.0 / s, rel_tol);
}

}  // namespace khplasma::testing
