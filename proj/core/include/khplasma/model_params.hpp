#pragma once

#include <optional>
#include <string>

namespace khplasma {

/// Physical inputs in atomic units.
///
/// The derived quantities A = Z e^2 and sigma = 2 mu A / hbar^2 are computed on
/// demand, so they stay consistent with the primary fields after any update.
struct ModelParams {
    double Z = 1.0;
    double mu = 1.0;
    double hbar = 1.0;
    double e_charge = 1.0;
    double lambda_D = 100.0;  ///< Debye screening length; +inf gives the unscreened limit.
    double alpha0 = 1e-4;     ///< Laser-dressing (quiver) amplitude.
    double F = 0.0;           ///< Static field strength.

    /// Laser angular frequency and field amplitude. Only used to derive alpha0.
    std::optional<double> omega;
    std::optional<double> E0_amp;

    [[nodiscard]] double A() const noexcept { return Z * e_charge * e_charge; }
    [[nodiscard]] double sigma() const noexcept { return 2.0 * mu * A() / (hbar * hbar); }

    /// Throws InputError naming the first violated invariant.
    void validate() const;

    [[nodiscard]] ModelParams with_F(double value) const;
    [[nodiscard]] ModelParams with_lambda_D(double value) const;
    [[nodiscard]] ModelParams with_alpha0(double value) const;

    /// Sets omega and E0_amp and recomputes alpha0 = e E0 / (mu omega^2).
    [[nodiscard]] ModelParams with_laser(double omega_value, double E0_value) const;

    /// Atomic units, Z = 1, the given screening, field, and dressing.
    static ModelParams hydrogen(double lambda_D, double F, double alpha0 = 1e-4);

    bool operator==(const ModelParams&) const = default;
};

/// alpha0 = e E0 / (mu omega^2).
double dressing_amplitude(double e_charge, double E0_amp, double mu, double omega);

std::string describe(const ModelParams& p);

}  // namespace khplasma
