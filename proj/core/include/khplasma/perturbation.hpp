#pragma once

#include "khplasma/model_params.hpp"
#include "khplasma/potential.hpp"

namespace khplasma {

/// Per-order contributions to the bound-state energy. `total` is filled by
/// assemble() only, so it always equals the sum of the parts.
struct EnergyBreakdown {
    double e0 = 0.0;
    double const_shift = 0.0;
    double e1 = 0.0;
    double e2 = 0.0;
    double e3 = 0.0;
    double total = 0.0;

    static EnergyBreakdown assemble(double e0, double const_shift, double e1, double e2, double e3);

    bool operator==(const EnergyBreakdown&) const = default;
};

/// Normalized unperturbed ground state 2 sigma^{3/2} r exp(-sigma r) and its energy -sigma A.
struct ZerothOrderSolution {
    double energy = 0.0;
    double sigma = 0.0;

    [[nodiscard]] double operator()(double r) const;
};

ZerothOrderSolution zeroth_order(const ModelParams& p);

/// W0(r) = -hbar / (r sqrt(2 mu)) + A sqrt(2 mu) / hbar.
class UnperturbedSuperpotential {
public:
    explicit UnperturbedSuperpotential(const ModelParams& p);

    [[nodiscard]] double operator()(double r) const;
    [[nodiscard]] double derivative(double r) const;

private:
    double pole_;      // hbar / sqrt(2 mu)
    double constant_;  // A sqrt(2 mu) / hbar
};

/// First-order superpotential, slope * r.
class LinearSuperpotential {
public:
    explicit LinearSuperpotential(double slope) : slope_(slope) {}

    [[nodiscard]] double operator()(double r) const { return slope_ * r; }
    [[nodiscard]] double derivative(double /*r*/) const { return slope_; }
    /// Antiderivative with value 0 at r = 0.
    [[nodiscard]] double integral(double r) const { return 0.5 * slope_ * r * r; }
    [[nodiscard]] double slope() const { return slope_; }

private:
    double slope_;
};

/// Second-order superpotential, scale * r (r + 2/sigma).
class QuadraticSuperpotential {
public:
    QuadraticSuperpotential(double scale, double sigma) : scale_(scale), sigma_(sigma) {}

    [[nodiscard]] double operator()(double r) const { return scale_ * r * (r + 2.0 / sigma_); }
    [[nodiscard]] double derivative(double r) const { return scale_ * (2.0 * r + 2.0 / sigma_); }
    /// Antiderivative with value 0 at r = 0.
    [[nodiscard]] double integral(double r) const {
        return scale_ * (r * r * r / 3.0 + r * r / sigma_);
    }
    [[nodiscard]] double scale() const { return scale_; }

private:
    double scale_;
    double sigma_;
};

struct SuperpotentialSet {
    UnperturbedSuperpotential w0;
    LinearSuperpotential w1;
    QuadraticSuperpotential w2;
};

double e1_correction(const ModelParams& p);
LinearSuperpotential w1_profile(const ModelParams& p);

/// Closed form written in the physical parameters.
double e2_correction(const ModelParams& p);
/// Same quantity through the expansion coefficients: 3 c2 / sigma^2 - 3 c1^2 hbar^6 / (32 mu^3 A^4).
double e2_from_coefficients(const ModelParams& p);

/// Solves the second-order Riccati equation with w0 and w1 fixed:
/// scale = (c2 - k1^2) sqrt(mu/2) / (sigma hbar), k1 the w1 slope.
QuadraticSuperpotential w2_profile(const ModelParams& p);

SuperpotentialSet superpotentials(const ModelParams& p);

/// Third-order correction in its tabulated closed form. The field term is quadratic in c1
/// where integral X0^2 (c3 r^3 - w1 w2) dr is cubic; this form reproduces table1_reference().
double e3_correction(const ModelParams& p);

/// Third-order correction implied by the Riccati hierarchy,
/// integral X0^2 (c3 r^3 - 2 w1 w2) dr, in closed form.
double e3_hierarchy(const ModelParams& p);

enum class ThirdOrderForm { tabulated, hierarchy };

/// Correction of the given order (0..3). Order 4 and above have no closed form here
/// and throw UnsupportedOrder.
double energy_correction(int order, const ModelParams& p,
                         ThirdOrderForm form = ThirdOrderForm::tabulated);

EnergyBreakdown total_energy(const ModelParams& p,
                             ThirdOrderForm form = ThirdOrderForm::tabulated);

/// X0(r) * exp(-sqrt(2 mu)/hbar * P(r)), P the antiderivative of w1 + w2 with P(0) = 0.
/// Not normalized. Throws DomainError for r <= 0.
double wavefunction_eval(double r, const ModelParams& p);

}  // namespace khplasma
