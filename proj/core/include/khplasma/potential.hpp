#pragma once

#include "khplasma/model_params.hpp"

namespace khplasma {

/// Coefficients of the small-r expansion of the dressed, field-tilted potential
///
///     V_eff(r) = c_m1 / r + c0 + c1 r + c2 r^2 + c3 r^3,
///
/// kept through alpha0^8. The static field enters c1 only.
struct EffectiveCoefficients {
    double c_m1 = 0.0;
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;

    bool operator==(const EffectiveCoefficients&) const = default;
};

/// Default Chebyshev-Gauss order for v0_quadrature.
inline constexpr int kDefaultQuadratureNodes = 64;

/// Exponential-cosine-screened Coulomb potential -(A/r) exp(-r/lambda_D) cos(r/lambda_D).
/// Throws DomainError for r <= 0.
double ecsc_eval(double r, const ModelParams& p);

/// Laser-dressed pair V_ecsc(r + alpha0) + V_ecsc(r - alpha0), each at full strength A.
/// The second term is evaluated at the signed argument r - alpha0.
/// Throws DomainError for r <= 0 and SingularityError within the guard band of r = alpha0.
double dressed_pair_eval(double r, const ModelParams& p);

/// Guard half-width around the r = alpha0 pole: 1e-12 * max(1, alpha0).
double singularity_guard(const ModelParams& p);

/// Zeroth Fourier channel of the oscillating potential,
///
///     (1/pi) * integral_{-1}^{1} 2 V_ecsc(r + alpha0 t) / sqrt(1 - t^2) dt,
///
/// by Chebyshev-Gauss quadrature. The factor 2 matches the two-term normalization of
/// dressed_pair_eval, so alpha0 = 0 reproduces it exactly.
/// Throws DomainError for r <= alpha0 and InputError for n_nodes < 8.
double v0_quadrature(double r, const ModelParams& p, int n_nodes = kDefaultQuadratureNodes);

EffectiveCoefficients taylor_coefficients(const ModelParams& p);

/// c_m1/r + c0 + c1 r + c2 r^2 + c3 r^3. Throws DomainError for r <= 0.
double veff_series_eval(double r, const EffectiveCoefficients& c);

/// dressed_pair_eval(r) + F r: the full model potential the expansion approximates.
double model_potential(double r, const ModelParams& p);

}  // namespace khplasma
