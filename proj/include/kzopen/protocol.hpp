#ifndef KZOPEN_PROTOCOL_HPP
#define KZOPEN_PROTOCOL_HPP

#include <utility>

#include "kzopen/errors.hpp"

namespace kz {

// Power-law ramp of temperature and parameter displacement toward the
// critical point, parametrized by tau = 1 - t/t_f in [0, 1]:
//   T(tau) = T_i tau^alpha,  dmu(tau) = dmu_i tau^beta.
// Both schedules hit zero exactly at tau = 0 (t = t_f). dmu_i carries the
// approach-side sign.
struct RampSpec {
    double alpha = 1.0; // > 0
    double beta = 1.0;  // > 0
    double dmu_i = 0.0; // signed; 0 allowed for T-only ramps
    double T_i = 0.0;   // >= 0; 0 allowed for mu-only ramps
    double t_f = 1.0;   // > 0

    void validate() const
    {
        if (!(alpha > 0.0))
            throw InvalidArgument("ramp.alpha must be > 0");
        if (!(beta > 0.0))
            throw InvalidArgument("ramp.beta must be > 0");
        if (!(T_i >= 0.0))
            throw InvalidArgument("ramp.T_i must be >= 0");
        if (!(t_f > 0.0))
            throw InvalidArgument("ramp.t_f must be > 0");
        if (dmu_i == 0.0 && T_i == 0.0)
            throw InvalidArgument("ramp requires dmu_i != 0 or T_i > 0");
    }
};

enum class RampClass { A, B, C };

const char* ramp_class_name(RampClass c);

// The four parameter-rescaling schemes. Each fixes the free powers (r, p) so
// that one of {gamma, kappa} and one of {v_T, v_mu} stay invariant, and
// carries the resulting exponent zeta = p / (s z).
struct SchemeParams {
    int scheme_id = 0; // 1..4
    double r = 0.0;
    double p = 0.0;
    double zeta = 0.0;
    double alpha = 0.0; // ramp powers carried along for velocity maps
    double beta = 0.0;
};

// Rescaled ramp parameters (t_f, gamma, kappa, dmu_i, T_i) and the velocities
// of the auxiliary ramp they define.
struct RescaledRamp {
    double t_f;
    double gamma;
    double kappa;
    double dmu_i;
    double T_i;
    double v_mu;
    double v_T;
};

// (dmu, T) at ramp coordinate tau in [0, 1].
std::pair<double, double> ramp_values(const RampSpec& ramp, double tau);

// Velocities (v_mu, v_T) = (dmu_i t_f^-beta, T_i t_f^-alpha). For linear
// ramps these are the usual constant ramp velocities.
std::pair<double, double> ramp_velocities(const RampSpec& ramp);

// Classify by comparing alpha/beta with nu z. Starts on the T axis are class
// A, starts on the dmu axis class C; class B detection uses the relative
// tolerance 1e-12 on alpha/beta = nu z.
RampClass classify(const RampSpec& ramp, double nu_z);

// Asymptotic scaling exponent of the final excitation density for the given
// ramp class. Dissipative predictions require s <= 1; the coherent (gamma=0)
// exponent ignores s. Class B requires alpha = nu z beta.
double predicted_exponent(RampClass cls, double alpha, double beta, double nu, double z,
                          double s, bool coherent);

// (r, p) and zeta for scheme_id in {1, 2, 3, 4}.
SchemeParams scheme_params(int scheme_id, double alpha, double beta, double nu, double z,
                           double s);

// Apply the scheme's rescaling map at f = t_f / t0.
RescaledRamp rescale_parameters(double t_f, double gamma, double kappa, double dmu_i,
                                double T_i, double t0, const SchemeParams& scheme,
                                double nu, double z, double s);

} // namespace kz

#endif
