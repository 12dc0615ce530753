#ifndef KZOPEN_BATH_HPP
#define KZOPEN_BATH_HPP

#include "kzopen/errors.hpp"

namespace kz {

// Thermal environment: identical independent bosonic baths with spectral
// density ~ delta * energy^s, coupled to the chain with dimensionless
// strength gamma. gamma = 0 disables every dissipative term exactly.
struct BathParams {
    double gamma = 0.0; // >= 0
    double delta = 1.0; // > 0
    double s = 1.0;     // > 0; scaling predictions cover s <= 1

    void validate() const
    {
        if (!(gamma >= 0.0))
            throw InvalidArgument("bath.gamma must be >= 0");
        if (!(delta > 0.0))
            throw InvalidArgument("bath.delta must be > 0");
        if (!(s > 0.0))
            throw InvalidArgument("bath.s must be > 0");
    }
};

// 1/(e^x - 1) for x > 0. Small arguments (x < 1e-6) use the Laurent series
// 1/x - 1/2 + x/12 to avoid cancellation.
double bose_einstein(double x);

// 1/(e^x + 1), total on the reals and overflow-safe for large |x|.
double fermi_dirac(double x);

// Fermi-Dirac occupation of a mode with energy lambda at temperature T.
// T = 0 is an exact code path (ground-state limit).
double thermal_occupation(double lambda, double T);

// Mode relaxation rate 2 pi gamma delta lambda^s coth(lambda / 2T).
// T = 0 returns 2 pi gamma delta lambda^s exactly; lambda/(2T) < 1e-6 uses the
// series lambda^s (2T/lambda + lambda/(6T)); coth arguments > 30 saturate to 1.
double relaxation_rate(const BathParams& bath, double lambda, double T);

struct JumpRates {
    double gamma_plus;  // absorption from the bath
    double gamma_minus; // emission into the bath
};

// Lindblad rates: gamma_plus = 2 pi delta lambda^s n_BE(lambda/T),
// gamma_minus = 2 pi delta lambda^s (n_BE(lambda/T) + 1). Detailed balance
// gamma_minus/gamma_plus = e^{lambda/T}. Requires lambda > 0.
JumpRates jump_rates(const BathParams& bath, double lambda, double T);

} // namespace kz

#endif
