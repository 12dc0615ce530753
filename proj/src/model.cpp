#include "kzopen/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kz {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_k_range(double k)
{
    if (!(k >= -kPi - 1e-12 && k <= kPi + 1e-12))
        throw InvalidArgument("wavenumber outside [-pi, pi]: k = " + std::to_string(k));
}

double fd_step(double dmu)
{
    return std::max(1e-7, 1e-7 * std::abs(dmu));
}

// Evaluate the q -> 0 local limit of a matrix element numerically.
double numeric_local_element(const ModelSpec& m, const BdgElement& f, double dmu, double k)
{
    return detail::aitken_limit([&](double q) {
        const double s_mu = std::pow(q, 1.0 / (m.nu * m.z));
        const double s_k = std::pow(q, 1.0 / m.z);
        return f(s_mu * dmu, s_k * k) / q;
    });
}

// Matrix elements of the local approximation at (dmu, k), k real.
void local_elements(const ModelSpec& m, double dmu, double k, double& a, double& b)
{
    if (m.has_local_forms()) {
        a = m.local_a_fn(dmu, k);
        b = m.local_b_fn(dmu, k);
    } else {
        a = numeric_local_element(m, m.a_fn, dmu, k);
        b = numeric_local_element(m, m.b_fn, dmu, k);
    }
}

double eps_to_k(const ModelSpec& m, double eps)
{
    if (eps < 0.0)
        throw InvalidArgument("mode energy label must be >= 0");
    return std::pow(eps / m.c1, 1.0 / m.z);
}

double half_atan2(double a, double b)
{
    return 0.5 * std::atan2(-b, a);
}

// d(beta)/d(dmu) from matrix elements and their dmu-partials.
double angle_rate_from_elements(double a, double b, double da, double db)
{
    const double n2 = a * a + b * b;
    return (b * da - a * db) / (2.0 * n2);
}

} // namespace

namespace detail {

double aitken_limit(const std::function<double(double)>& f)
{
    const double x0 = f(1e-3);
    const double x1 = f(1e-4);
    const double x2 = f(1e-5);
    const double d1 = x1 - x0;
    const double d2 = x2 - x1;
    const double denom = d2 - d1;
    if (std::abs(denom) < 1e-14 * (std::abs(x2) + 1e-300))
        return x2;
    return x2 - d2 * d2 / denom;
}

} // namespace detail

ModelSpec make_kitaev(const KitaevParams& p)
{
    if (!(p.J > 0.0) || !(p.Delta_p > 0.0))
        throw InvalidArgument("Kitaev parameters J, Delta_p must be > 0");

    ModelSpec m;
    m.name = "kitaev";
    m.mu_c = -p.J;
    m.nu = 1.0;
    m.z = 1.0;
    m.c1 = p.Delta_p;
    m.c2 = 2.0;

    const double J = p.J;
    const double Dp = p.Delta_p;
    m.a_fn = [J](double dmu, double k) { return 2.0 * (dmu - J + J * std::cos(k)); };
    m.b_fn = [Dp](double /*dmu*/, double k) { return Dp * std::sin(k); };
    m.da_fn = [](double, double) { return 2.0; };
    m.db_fn = [](double, double) { return 0.0; };

    m.local_a_fn = [](double dmu, double /*k*/) { return 2.0 * dmu; };
    m.local_b_fn = [Dp](double /*dmu*/, double k) { return Dp * k; };
    m.local_da_fn = [](double, double) { return 2.0; };
    m.local_db_fn = [](double, double) { return 0.0; };
    return m;
}

double dispersion(const ModelSpec& m, double dmu, double k)
{
    check_k_range(k);
    return std::hypot(m.a_fn(dmu, k), m.b_fn(dmu, k));
}

double bogoliubov_angle(const ModelSpec& m, double dmu, double k)
{
    check_k_range(k);
    const double a = m.a_fn(dmu, k);
    const double b = m.b_fn(dmu, k);
    if (a == 0.0 && b == 0.0)
        throw DegeneratePoint("gapless point: a = b = 0 at dmu = " + std::to_string(dmu) +
                              ", k = " + std::to_string(k));
    return half_atan2(a, b);
}

double bogoliubov_angle_rate(const ModelSpec& m, double dmu, double k, double dmu_dt)
{
    check_k_range(k);
    if (dmu_dt == 0.0)
        return 0.0;
    const double a = m.a_fn(dmu, k);
    const double b = m.b_fn(dmu, k);
    if (a == 0.0 && b == 0.0)
        throw DegeneratePoint("gapless point in angle rate at k = " + std::to_string(k));
    if (m.has_analytic_partials())
        return angle_rate_from_elements(a, b, m.da_fn(dmu, k), m.db_fn(dmu, k)) * dmu_dt;
    const double h = fd_step(dmu);
    const double da = (m.a_fn(dmu + h, k) - m.a_fn(dmu - h, k)) / (2.0 * h);
    const double db = (m.b_fn(dmu + h, k) - m.b_fn(dmu - h, k)) / (2.0 * h);
    return angle_rate_from_elements(a, b, da, db) * dmu_dt;
}

double local_dispersion(const ModelSpec& m, double dmu, double eps)
{
    const double k = eps_to_k(m, eps);
    double a, b;
    local_elements(m, dmu, k, a, b);
    return std::hypot(a, b);
}

double local_angle(const ModelSpec& m, double dmu, double eps)
{
    const double k = eps_to_k(m, eps);
    double a, b;
    local_elements(m, dmu, k, a, b);
    if (a == 0.0 && b == 0.0)
        throw DegeneratePoint("local angle undefined at (dmu, eps) = (0, 0)");
    return half_atan2(a, b);
}

double local_angle_rate(const ModelSpec& m, double dmu, double eps, double dmu_dt)
{
    if (dmu_dt == 0.0)
        return 0.0;
    const double k = eps_to_k(m, eps);
    double a, b;
    local_elements(m, dmu, k, a, b);
    if (a == 0.0 && b == 0.0)
        throw DegeneratePoint("local angle rate undefined at (0, 0)");
    if (m.has_local_forms() && m.local_da_fn && m.local_db_fn)
        return angle_rate_from_elements(a, b, m.local_da_fn(dmu, k), m.local_db_fn(dmu, k)) * dmu_dt;
    const double h = fd_step(dmu);
    double ap, bp, am, bm;
    local_elements(m, dmu + h, k, ap, bp);
    local_elements(m, dmu - h, k, am, bm);
    return angle_rate_from_elements(a, b, (ap - am) / (2.0 * h), (bp - bm) / (2.0 * h)) * dmu_dt;
}

double gap(const ModelSpec& m, double dmu)
{
    // dispersion is even in k, so scan [0, pi].
    const int n_scan = 256;
    double best = std::numeric_limits<double>::infinity();
    int best_i = 0;
    for (int i = 0; i <= n_scan; ++i) {
        const double v = dispersion(m, dmu, kPi * i / n_scan);
        if (v < best) {
            best = v;
            best_i = i;
        }
    }
    double lo = kPi * std::max(0, best_i - 1) / n_scan;
    double hi = kPi * std::min(n_scan, best_i + 1) / n_scan;

    // Golden-section refinement on [lo, hi].
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    double f1 = dispersion(m, dmu, x1);
    double f2 = dispersion(m, dmu, x2);
    while (hi - lo > 1e-12) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = dispersion(m, dmu, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = dispersion(m, dmu, x2);
        }
    }
    return std::min({best, f1, f2});
}

double local_dos(const ModelSpec& m, double eps)
{
    if (eps < 0.0)
        throw InvalidArgument("local_dos requires eps >= 0");
    if (eps == 0.0 && m.z > 1.0)
        throw InvalidArgument("local_dos diverges at eps = 0 for z > 1");
    return std::pow(eps, 1.0 / m.z - 1.0) / (kPi * m.z * std::pow(m.c1, 1.0 / m.z));
}

} // namespace kz
