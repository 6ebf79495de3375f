#include "khplasma/potential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "khplasma/errors.hpp"

namespace khplasma {

namespace {

// Screened Coulomb kernel at a signed, nonzero argument.
double ecsc_kernel(double x, double A, double lambda_D) {
    const double y = x / lambda_D;
    return -(A / x) * std::exp(-y) * std::cos(y);
}

void require_positive_r(double r, const char* where) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        std::ostringstream msg;
        msg << where << ": r must be finite and > 0 (got " << r << ")";
        throw DomainError(msg.str());
    }
}

}  // namespace

double ecsc_eval(double r, const ModelParams& p) {
    require_positive_r(r, "ecsc_eval");
    return ecsc_kernel(r, p.A(), p.lambda_D);
}

double singularity_guard(const ModelParams& p) {
    return 1e-12 * std::max(1.0, p.alpha0);
}

double dressed_pair_eval(double r, const ModelParams& p) {
    require_positive_r(r, "dressed_pair_eval");
    const double minus = r - p.alpha0;
    if (std::abs(minus) < singularity_guard(p)) {
        std::ostringstream msg;
        msg << "dressed_pair_eval: r = " << r << " lies on the r = alpha0 pole";
        throw SingularityError(msg.str());
    }
    const double A = p.A();
    return ecsc_kernel(r + p.alpha0, A, p.lambda_D) + ecsc_kernel(minus, A, p.lambda_D);
}

double v0_quadrature(double r, const ModelParams& p, int n_nodes) {
    if (n_nodes < 8) {
        throw InputError("v0_quadrature: n_nodes must be >= 8");
    }
    if (!(r > p.alpha0) || !std::isfinite(r)) {
        std::ostringstream msg;
        msg << "v0_quadrature: r must exceed alpha0 = " << p.alpha0 << " (got " << r << ")";
        throw DomainError(msg.str());
    }
    // Chebyshev-Gauss: nodes cos((2k-1) pi / 2N), weights pi/N; the 1/pi prefactor
    // leaves a plain average.
    const double A = p.A();
    const double step = std::numbers::pi / (2.0 * n_nodes);
    double sum = 0.0;
    for (int k = 1; k <= n_nodes; ++k) {
        const double node = std::cos((2 * k - 1) * step);
        sum += 2.0 * ecsc_kernel(r + p.alpha0 * node, A, p.lambda_D);
    }
    return sum / n_nodes;
}

EffectiveCoefficients taylor_coefficients(const ModelParams& p) {
    p.validate();
    const double A = p.A();
    const double l = p.lambda_D;
    const double a2 = p.alpha0 * p.alpha0;
    const double a4 = a2 * a2;
    const double a6 = a4 * a2;
    const double a8 = a4 * a4;
    // Inverse powers rather than pow(l, -k) so lambda_D = inf collapses to exact zeros.
    const double il = 1.0 / l;
    const double il2 = il * il;
    const double il3 = il2 * il;
    const double il4 = il2 * il2;
    const double il5 = il4 * il;
    const double il7 = il5 * il2;
    const double il8 = il4 * il4;
    const double il9 = il8 * il;
    const double il11 = il9 * il2;
    const double il12 = il8 * il4;

    EffectiveCoefficients c;
    c.c_m1 = -2.0 * A;
    c.c0 = A * a8 * il9 / 11340.0 + A * a6 * il7 / 315.0 - A * a4 * il5 / 15.0 -
           2.0 * A * a2 * il3 / 3.0 + 2.0 * A * il;
    c.c1 = p.F - A * a6 * il8 / 180.0 + A * a2 * il4;
    c.c2 = -A * a8 * il11 / 13860.0 + A * a6 * il9 / 405.0 + A * a4 * il7 / 21.0 -
           2.0 * A * a2 * il5 / 5.0 - 2.0 * A * il3 / 3.0;
    c.c3 = A * a8 * il12 / 22680.0 - A * a4 * il8 / 36.0 + A * il4 / 3.0;
    return c;
}

double veff_series_eval(double r, const EffectiveCoefficients& c) {
    require_positive_r(r, "veff_series_eval");
    return c.c_m1 / r + c.c0 + r * (c.c1 + r * (c.c2 + r * c.c3));
}

double model_potential(double r, const ModelParams& p) {
    return dressed_pair_eval(r, p) + p.F * r;
}

}  // namespace khplasma
