#include "kzopen/bath.hpp"

#include <cmath>
#include <limits>

namespace kz {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kSeriesCut = 1e-6;
constexpr double kCothSaturation = 30.0;

double pow_s(double x, double s)
{
    return s == 1.0 ? x : std::pow(x, s);
}

} // namespace

double bose_einstein(double x)
{
    if (!(x > 0.0))
        throw InvalidArgument("bose_einstein requires x > 0");
    if (x < kSeriesCut)
        return 1.0 / x - 0.5 + x / 12.0;
    return 1.0 / std::expm1(x);
}

double fermi_dirac(double x)
{
    if (x >= 0.0) {
        const double e = std::exp(-x);
        return e / (1.0 + e);
    }
    return 1.0 / (std::exp(x) + 1.0);
}

double thermal_occupation(double lambda, double T)
{
    if (T > 0.0)
        return fermi_dirac(lambda / T);
    return lambda > 0.0 ? 0.0 : 0.5;
}

double relaxation_rate(const BathParams& bath, double lambda, double T)
{
    if (lambda < 0.0 || T < 0.0)
        throw InvalidArgument("relaxation_rate requires lambda >= 0 and T >= 0");
    if (bath.gamma == 0.0)
        return 0.0;
    const double pref = kTwoPi * bath.gamma * bath.delta;
    if (T == 0.0)
        return pref * pow_s(lambda, bath.s);
    if (lambda == 0.0) {
        if (bath.s == 1.0)
            return pref * 2.0 * T;
        return bath.s > 1.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    const double y = lambda / (2.0 * T);
    if (y < kSeriesCut)
        return pref * pow_s(lambda, bath.s) * (2.0 * T / lambda + lambda / (6.0 * T));
    if (y > kCothSaturation)
        return pref * pow_s(lambda, bath.s);
    const double em = std::expm1(2.0 * y);
    return pref * pow_s(lambda, bath.s) * (em + 2.0) / em;
}

JumpRates jump_rates(const BathParams& bath, double lambda, double T)
{
    if (!(lambda > 0.0))
        throw InvalidArgument("jump_rates requires lambda > 0");
    if (T < 0.0)
        throw InvalidArgument("jump_rates requires T >= 0");
    const double base = kTwoPi * bath.delta * pow_s(lambda, bath.s);
    if (T == 0.0)
        return {0.0, base};
    const double n = bose_einstein(lambda / T);
    return {base * n, base * (n + 1.0)};
}

} // namespace kz
