#ifndef KZOPEN_MODEL_HPP
#define KZOPEN_MODEL_HPP

#include <functional>
#include <string>

#include "kzopen/errors.hpp"

namespace kz {

// Bogoliubov-de Gennes matrix element as a function of the signed parameter
// displacement dmu = mu - mu_c and the wavenumber k.
using BdgElement = std::function<double(double dmu, double k)>;

// A translationally invariant quadratic chain near its quantum critical point.
//
// dmu is always the signed displacement mu - mu_c. Formulas that the critical
// data express in |dmu| take the absolute value internally, so both approach
// sides are supported.
//
// The local_* members are the closed-form critical-region limits of a/b when
// the model provides them. When empty, the limits are evaluated numerically
// from a_fn/b_fn (Aitken-accelerated q -> 0 sequence at q = 1e-3, 1e-4, 1e-5).
struct ModelSpec {
    std::string name;

    double mu_c = 0.0;
    double nu = 1.0;   // correlation-length exponent, > 0
    double z = 1.0;    // dynamical exponent, > 0
    double c1 = 1.0;   // dispersion(0, k) ~ c1 |k|^z
    double c2 = 1.0;   // gap(dmu) ~ c2 |dmu|^{nu z}

    BdgElement a_fn;   // even in k
    BdgElement b_fn;   // odd in k, b(dmu, 0) = 0

    // Analytic partial derivatives wrt dmu; empty means central differences.
    BdgElement da_fn;
    BdgElement db_fn;

    // Closed-form local approximations, arguments (dmu, k) with k real.
    BdgElement local_a_fn;
    BdgElement local_b_fn;
    BdgElement local_da_fn;
    BdgElement local_db_fn;

    bool has_analytic_partials() const { return static_cast<bool>(da_fn) && static_cast<bool>(db_fn); }
    bool has_local_forms() const { return static_cast<bool>(local_a_fn) && static_cast<bool>(local_b_fn); }
};

// Kitaev chain: a_k = 2(mu + J cos k), b_k = Delta_p sin k.
// Induced critical data: mu_c = -J, nu = z = 1, c1 = Delta_p, c2 = 2.
struct KitaevParams {
    double J = 1.0;
    double Delta_p = 1.0;
};

ModelSpec make_kitaev(const KitaevParams& p);

// Quasiparticle energy sqrt(a^2 + b^2). Total on dmu, k in [-pi, pi].
double dispersion(const ModelSpec& m, double dmu, double k);

// Half-angle of (-b, a) via the two-argument arctangent, giving values in
// (-pi/2, pi/2]. At k = 0 with a_0 < 0 this lands on the pi/2 branch; the
// choice is inert for the dynamics (only angle rates enter) and is fixed here
// so results are reproducible. Throws DegeneratePoint when a = b = 0.
double bogoliubov_angle(const ModelSpec& m, double dmu, double k);

// d(beta)/dt for an externally imposed d(dmu)/dt. Uses analytic partials when
// the model has them, otherwise a central difference in dmu with step
// max(1e-7, 1e-7 |dmu|).
double bogoliubov_angle_rate(const ModelSpec& m, double dmu, double k, double dmu_dt);

// Local (critical-region) dispersion as a function of the mode energy label
// eps = c1 |k|^z >= 0. Satisfies L(a^{1/(nu z)} dmu, a eps) = a L(dmu, eps).
double local_dispersion(const ModelSpec& m, double dmu, double eps);

// Local Bogoliubov angle in the energy label. Invariant under the same
// rescaling. Throws DegeneratePoint at (0, 0).
double local_angle(const ModelSpec& m, double dmu, double eps);

// d(local angle)/dt for an imposed d(dmu)/dt.
double local_angle_rate(const ModelSpec& m, double dmu, double eps, double dmu_dt);

// min_k dispersion(dmu, k): coarse scan over [0, pi] refined by golden-section
// search to an absolute k-tolerance of 1e-12.
double gap(const ModelSpec& m, double dmu);

// Density of states of the local mode set, rho(eps) = eps^{1/z-1}/(pi z c1^{1/z}).
// Includes the factor of two for the k < 0 modes. Requires eps > 0 when z > 1
// (integrable divergence at eps = 0).
double local_dos(const ModelSpec& m, double eps);

namespace detail {
// Aitken-accelerated limit of f(q)/denominator over q = 1e-3, 1e-4, 1e-5.
double aitken_limit(const std::function<double(double)>& f);
} // namespace detail

} // namespace kz

#endif
