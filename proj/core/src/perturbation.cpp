#include "khplasma/perturbation.hpp"

#include <cmath>
#include <sstream>

#include "khplasma/errors.hpp"

namespace khplasma {

namespace {

// The recurring alpha0/lambda_D polynomial of the second- and third-order terms,
// -a^8/(4620 l^11) + a^6/(135 l^9) + a^4/(7 l^7) - 6a^2/(5 l^5) - 2/l^3  (= 3 c2 / A).
double second_order_screening(const ModelParams& p) {
    const double a2 = p.alpha0 * p.alpha0;
    const double a4 = a2 * a2;
    const double a6 = a4 * a2;
    const double a8 = a4 * a4;
    const double il = 1.0 / p.lambda_D;
    const double il2 = il * il;
    const double il3 = il2 * il;
    const double il5 = il3 * il2;
    const double il7 = il5 * il2;
    const double il9 = il7 * il2;
    const double il11 = il9 * il2;
    return -a8 * il11 / 4620.0 + a6 * il9 / 135.0 + a4 * il7 / 7.0 - 6.0 * a2 * il5 / 5.0 -
           2.0 * il3;
}

// 15 c3, spelled as in the tabulated closed form.
double third_order_screening(const ModelParams& p) {
    const double A = p.A();
    const double a4 = std::pow(p.alpha0, 4);
    const double a8 = a4 * a4;
    const double il4 = std::pow(1.0 / p.lambda_D, 4);
    const double il8 = il4 * il4;
    const double il12 = il8 * il4;
    return A * a8 * il12 / 1512.0 - 5.0 * A * a4 * il8 / 12.0 + 5.0 * A * il4;
}

}  // namespace

EnergyBreakdown EnergyBreakdown::assemble(double e0, double const_shift, double e1, double e2,
                                          double e3) {
    EnergyBreakdown b;
    b.e0 = e0;
    b.const_shift = const_shift;
    b.e1 = e1;
    b.e2 = e2;
    b.e3 = e3;
    b.total = e0 + const_shift + e1 + e2 + e3;
    return b;
}

double ZerothOrderSolution::operator()(double r) const {
    return 2.0 * std::pow(sigma, 1.5) * r * std::exp(-sigma * r);
}

ZerothOrderSolution zeroth_order(const ModelParams& p) {
    p.validate();
    const double s = p.sigma();
    return ZerothOrderSolution{-s * p.A(), s};
}

UnperturbedSuperpotential::UnperturbedSuperpotential(const ModelParams& p)
    : pole_(p.hbar / std::sqrt(2.0 * p.mu)), constant_(p.A() * std::sqrt(2.0 * p.mu) / p.hbar) {}

double UnperturbedSuperpotential::operator()(double r) const { return -pole_ / r + constant_; }

double UnperturbedSuperpotential::derivative(double r) const { return pole_ / (r * r); }

double e1_correction(const ModelParams& p) {
    const EffectiveCoefficients c = taylor_coefficients(p);
    return 1.5 / p.sigma() * c.c1;
}

LinearSuperpotential w1_profile(const ModelParams& p) {
    const EffectiveCoefficients c = taylor_coefficients(p);
    return LinearSuperpotential(std::sqrt(p.mu / 2.0) / (p.hbar * p.sigma()) * c.c1);
}

double e2_correction(const ModelParams& p) {
    p.validate();
    const double A = p.A();
    const double h2 = p.hbar * p.hbar;
    const double h4 = h2 * h2;
    const double h6 = h4 * h2;
    const double a2 = p.alpha0 * p.alpha0;
    const double il4 = std::pow(1.0 / p.lambda_D, 4);
    const double field = p.F / A - a2 * a2 * a2 * il4 * il4 / 180.0 + a2 * il4;
    return h4 / (4.0 * p.mu * p.mu * A) * second_order_screening(p) -
           3.0 * h6 / (32.0 * std::pow(p.mu, 3) * A * A) * field * field;
}

double e2_from_coefficients(const ModelParams& p) {
    const EffectiveCoefficients c = taylor_coefficients(p);
    const double s = p.sigma();
    const double A = p.A();
    return 3.0 * c.c2 / (s * s) -
           3.0 * c.c1 * c.c1 * std::pow(p.hbar, 6) / (32.0 * std::pow(p.mu, 3) * std::pow(A, 4));
}

QuadraticSuperpotential w2_profile(const ModelParams& p) {
    const EffectiveCoefficients c = taylor_coefficients(p);
    const double s = p.sigma();
    const double k1 = w1_profile(p).slope();
    return QuadraticSuperpotential((c.c2 - k1 * k1) * std::sqrt(p.mu / 2.0) / (s * p.hbar), s);
}

SuperpotentialSet superpotentials(const ModelParams& p) {
    return SuperpotentialSet{UnperturbedSuperpotential(p), w1_profile(p), w2_profile(p)};
}

double e3_correction(const ModelParams& p) {
    const EffectiveCoefficients c = taylor_coefficients(p);
    const double s = p.sigma();
    const double A = p.A();
    const double h2 = p.hbar * p.hbar;
    const double s2 = s * s;
    return 1.0 / (2.0 * s2 * s) *
           (third_order_screening(p) +
            27.0 * p.mu * p.mu / (4.0 * h2 * h2 * s2 * s2) * c.c1 * c.c1 -
            9.0 * p.mu * A / (2.0 * h2 * s2) * c.c1 * second_order_screening(p));
}

double e3_hierarchy(const ModelParams& p) {
    const EffectiveCoefficients c = taylor_coefficients(p);
    const double A = p.A();
    const double mu = p.mu;
    const double hbar = p.hbar;
    return 15.0 * c.c3 * std::pow(hbar, 6) / (16.0 * std::pow(A * mu, 3)) -
           27.0 * c.c1 * c.c2 * std::pow(hbar, 8) / (64.0 * std::pow(A, 5) * std::pow(mu, 4)) +
           27.0 * std::pow(c.c1, 3) * std::pow(hbar, 10) /
               (512.0 * std::pow(A, 7) * std::pow(mu, 5));
}

double energy_correction(int order, const ModelParams& p, ThirdOrderForm form) {
    switch (order) {
        case 0:
            return zeroth_order(p).energy;
        case 1:
            return e1_correction(p);
        case 2:
            return e2_correction(p);
        case 3:
            return form == ThirdOrderForm::tabulated ? e3_correction(p) : e3_hierarchy(p);
        default: {
            std::ostringstream msg;
            msg << "energy correction of order " << order
                << " is not available (closed forms exist through third order)";
            throw UnsupportedOrder(msg.str());
        }
    }
}

EnergyBreakdown total_energy(const ModelParams& p, ThirdOrderForm form) {
    const EffectiveCoefficients c = taylor_coefficients(p);
    return EnergyBreakdown::assemble(energy_correction(0, p), c.c0, energy_correction(1, p),
                                     energy_correction(2, p), energy_correction(3, p, form));
}

double wavefunction_eval(double r, const ModelParams& p) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        std::ostringstream msg;
        msg << "wavefunction_eval: r must be finite and > 0 (got " << r << ")";
        throw DomainError(msg.str());
    }
    const ZerothOrderSolution x0 = zeroth_order(p);
    const double moderating = w1_profile(p).integral(r) + w2_profile(p).integral(r);
    return x0(r) * std::exp(-std::sqrt(2.0 * p.mu) / p.hbar * moderating);
}

}  // namespace khplasma
