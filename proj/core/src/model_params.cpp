#include "khplasma/model_params.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "khplasma/errors.hpp"

namespace khplasma {

namespace {

void require(bool ok, const char* what, double value) {
    if (!ok) {
        std::ostringstream msg;
        msg << what << " (got " << value << ")";
        throw InputError(msg.str());
    }
}

}  // namespace

void ModelParams::validate() const {
    require(std::isfinite(Z) && Z >= 1.0, "Z must be >= 1", Z);
    require(std::isfinite(mu) && mu > 0.0, "mu must be > 0", mu);
    require(std::isfinite(hbar) && hbar > 0.0, "hbar must be > 0", hbar);
    require(std::isfinite(e_charge) && e_charge > 0.0, "e_charge must be > 0", e_charge);
    // +inf is the unscreened limit; every formula only uses 1/lambda_D^k.
    require(!std::isnan(lambda_D) && lambda_D > 0.0, "lambda_D must be > 0", lambda_D);
    require(std::isfinite(alpha0) && alpha0 >= 0.0, "alpha0 must be >= 0", alpha0);
    require(std::isfinite(F) && F >= 0.0, "F must be >= 0", F);
    if (omega) require(std::isfinite(*omega) && *omega > 0.0, "omega must be > 0", *omega);
    if (E0_amp) require(std::isfinite(*E0_amp) && *E0_amp >= 0.0, "E0_amp must be >= 0", *E0_amp);
}

ModelParams ModelParams::with_F(double value) const {
    ModelParams p = *this;
    p.F = value;
    return p;
}

ModelParams ModelParams::with_lambda_D(double value) const {
    ModelParams p = *this;
    p.lambda_D = value;
    return p;
}

ModelParams ModelParams::with_alpha0(double value) const {
    ModelParams p = *this;
    p.alpha0 = value;
    p.omega.reset();
    p.E0_amp.reset();
    return p;
}

ModelParams ModelParams::with_laser(double omega_value, double E0_value) const {
    require(std::isfinite(omega_value) && omega_value > 0.0, "omega must be > 0", omega_value);
    ModelParams p = *this;
    p.omega = omega_value;
    p.E0_amp = E0_value;
    p.alpha0 = dressing_amplitude(e_charge, E0_value, mu, omega_value);
    return p;
}

ModelParams ModelParams::hydrogen(double lambda_D, double F, double alpha0) {
    ModelParams p;
    p.lambda_D = lambda_D;
    p.F = F;
    p.alpha0 = alpha0;
    return p;
}

double dressing_amplitude(double e_charge, double E0_amp, double mu, double omega) {
    return e_charge * E0_amp / (mu * omega * omega);
}

std::string describe(const ModelParams& p) {
    // Shortest text that reads back to the same double.
    const auto num = [](double v) {
        char buf[32];
        const auto res = std::to_chars(buf, buf + sizeof buf, v);
        return std::string(buf, res.ptr);
    };
    std::string out = "Z=" + num(p.Z) + " mu=" + num(p.mu) + " hbar=" + num(p.hbar) +
                      " e=" + num(p.e_charge) + " lambda_D=" + num(p.lambda_D) +
                      " alpha0=" + num(p.alpha0) + " F=" + num(p.F);
    if (p.omega) out += " omega=" + num(*p.omega);
    if (p.E0_amp) out += " E0_amp=" + num(*p.E0_amp);
    return out;
}

}  // namespace khplasma
