#include "kzopen/protocol.hpp"

#include <cmath>
#include <string>

namespace kz {

namespace {
constexpr double kClassBTol = 1e-12;
}

const char* ramp_class_name(RampClass c)
{
    switch (c) {
    case RampClass::A: return "A";
    case RampClass::B: return "B";
    case RampClass::C: return "C";
    }
    return "?";
}

std::pair<double, double> ramp_values(const RampSpec& ramp, double tau)
{
    if (!(tau >= 0.0 && tau <= 1.0))
        throw InvalidArgument("ramp_values requires tau in [0, 1]");
    return {ramp.dmu_i * std::pow(tau, ramp.beta), ramp.T_i * std::pow(tau, ramp.alpha)};
}

std::pair<double, double> ramp_velocities(const RampSpec& ramp)
{
    return {ramp.dmu_i * std::pow(ramp.t_f, -ramp.beta), ramp.T_i * std::pow(ramp.t_f, -ramp.alpha)};
}

RampClass classify(const RampSpec& ramp, double nu_z)
{
    ramp.validate();
    if (!(nu_z > 0.0))
        throw InvalidArgument("classify requires nu z > 0");
    if (ramp.dmu_i == 0.0)
        return RampClass::A;
    if (ramp.T_i == 0.0)
        return RampClass::C;
    const double ratio = ramp.alpha / ramp.beta;
    if (std::abs(ratio - nu_z) <= kClassBTol * nu_z)
        return RampClass::B;
    return ratio < nu_z ? RampClass::A : RampClass::C;
}

double predicted_exponent(RampClass cls, double alpha, double beta, double nu, double z,
                          double s, bool coherent)
{
    if (!(alpha > 0.0) || !(beta > 0.0) || !(nu > 0.0) || !(z > 0.0))
        throw InvalidArgument("predicted_exponent requires positive alpha, beta, nu, z");
    if (coherent)
        return nu * beta / (1.0 + nu * z * beta);
    if (!(s > 0.0))
        throw InvalidArgument("predicted_exponent requires s > 0");
    if (s > 1.0)
        throw UnsupportedRegime("dissipative scaling predictions cover s <= 1 only "
                                "(super-ohmic class C reduces to the coherent exponent; "
                                "request it explicitly via the coherent flag)");
    const double zeta_a = alpha / (z * (1.0 + s * alpha));
    const double zeta_c = nu * z * beta / (z * (1.0 + s * nu * z * beta));
    switch (cls) {
    case RampClass::A:
        return zeta_a;
    case RampClass::C:
        return zeta_c;
    case RampClass::B: {
        if (std::abs(alpha - nu * z * beta) > kClassBTol * nu * z * beta)
            throw InvalidArgument("class B requires alpha = nu z beta; got alpha = " +
                                  std::to_string(alpha) + ", nu z beta = " +
                                  std::to_string(nu * z * beta));
        if (std::abs(zeta_a - zeta_c) > 1e-12 * zeta_a)
            throw Error("class B exponent formulas disagree");
        return zeta_a;
    }
    }
    throw InvalidArgument("unknown ramp class");
}

SchemeParams scheme_params(int scheme_id, double alpha, double beta, double nu, double z,
                           double s)
{
    if (!(alpha > 0.0) || !(beta > 0.0) || !(nu > 0.0) || !(z > 0.0) || !(s > 0.0))
        throw InvalidArgument("scheme_params requires positive alpha, beta, nu, z, s");
    SchemeParams sp;
    sp.scheme_id = scheme_id;
    sp.alpha = alpha;
    sp.beta = beta;
    const double nzb = nu * z * beta;
    switch (scheme_id) {
    case 1:
        sp.r = sp.p = s * alpha / (1.0 + s * alpha);
        break;
    case 2:
        sp.r = sp.p = s * nzb / (1.0 + s * nzb);
        break;
    case 3:
        sp.r = alpha / (1.0 + alpha);
        sp.p = s * sp.r;
        break;
    case 4:
        sp.r = nzb / (1.0 + nzb);
        sp.p = s * sp.r;
        break;
    default:
        throw InvalidArgument("scheme_id must be 1, 2, 3 or 4");
    }
    sp.zeta = sp.p / (s * z);
    return sp;
}

RescaledRamp rescale_parameters(double t_f, double gamma, double kappa, double dmu_i,
                                double T_i, double t0, const SchemeParams& scheme,
                                double nu, double z, double s)
{
    if (!(t0 > 0.0))
        throw InvalidArgument("rescale_parameters requires t0 > 0");
    const double f = t_f / t0;
    const double r = scheme.r;
    const double p = scheme.p;
    RescaledRamp out;
    out.t_f = t0 * std::pow(f, 1.0 - r);
    out.gamma = std::pow(f, r - p) * gamma;
    out.kappa = std::pow(f, r - p / s) * kappa;
    out.dmu_i = std::pow(f, p / (s * nu * z)) * dmu_i;
    out.T_i = std::pow(f, p / s) * T_i;
    out.v_T = std::pow(f, p / s - scheme.alpha * (1.0 - r)) * T_i * std::pow(t0, -scheme.alpha);
    out.v_mu = std::pow(f, p / (s * nu * z) - scheme.beta * (1.0 - r)) * dmu_i *
               std::pow(t0, -scheme.beta);
    return out;
}

} // namespace kz
