#include "statedist/rmt.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "statedist/complex_matrix.hpp"

namespace statedist {

namespace {

constexpr double kPi = std::numbers::pi;

// 1 - 64/(9 pi^2), the coefficient of the closed-form trace-norm bound
double bound_coefficient() { return 1.0 - 64.0 / (9.0 * kPi * kPi); }

// Recursive adaptive Simpson with the usual 1/15 Richardson error control.
template <typename F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth <= 0)
        throw std::runtime_error("adaptive quadrature failed to converge");
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double integrate(const F& f, double a, double b, double tol) {
    if (!(b > a)) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

void check_ratio(double r) {
    if (!(r > 0.0 && r <= 1.0))
        throw ValidationError("marchenko-pastur: ratio must lie in (0, 1]");
}

}  // namespace

RatioRegime make_ratio_regime(std::size_t n, std::size_t d) {
    if (n < 1 || d < 1) throw ValidationError("ratio regime: n and d must be >= 1");
    RatioRegime regime;
    regime.n = n;
    regime.d = d;
    regime.k = std::min(n, d);
    regime.m = std::max(n, d);
    regime.r = static_cast<double>(regime.k) / static_cast<double>(regime.m);
    regime.A = 1.0 - std::sqrt(regime.r);
    regime.B = 1.0 + std::sqrt(regime.r);
    return regime;
}

double mp_eigen_density(double x, double r) {
    check_ratio(r);
    const double a2 = (1.0 - std::sqrt(r)) * (1.0 - std::sqrt(r));
    const double b2 = (1.0 + std::sqrt(r)) * (1.0 + std::sqrt(r));
    if (x <= a2 || x >= b2) return 0.0;
    return std::sqrt((x - a2) * (b2 - x)) / (2.0 * kPi * r * x);
}

double mp_singular_density(double y, double r) {
    check_ratio(r);
    const double a = 1.0 - std::sqrt(r);
    const double b = 1.0 + std::sqrt(r);
    if (y <= a || y >= b) return 0.0;
    return std::sqrt((y * y - a * a) * (b * b - y * y)) / (kPi * r * y);
}

double mp_eigen_cdf(double x, double r) {
    check_ratio(r);
    const double a = 1.0 - std::sqrt(r);
    const double b = 1.0 + std::sqrt(r);
    const double a2 = a * a;
    const double b2 = b * b;
    if (x <= a2) return 0.0;
    if (x >= b2) return 1.0;
    // substitute x(phi) = a2 cos^2 + b2 sin^2; the integrand is smooth in phi
    const double span = b2 - a2;
    const double phi_hi = std::asin(std::sqrt((x - a2) / span));
    const auto integrand = [&](double phi) {
        const double s = std::sin(phi);
        const double c = std::cos(phi);
        const double xs = a2 * c * c + b2 * s * s;
        if (xs <= 0.0) return b2 * c * c / (kPi * r);  // phi -> 0 limit when a = 0
        return span * span * s * s * c * c / (kPi * r * xs);
    };
    const double v = integrate(integrand, 0.0, phi_hi, 1e-11);
    return std::min(1.0, std::max(0.0, v));
}

double elliptic_f(double r) {
    if (!(r >= 0.0 && r <= 1.0)) throw ValidationError("elliptic_f: r must lie in [0, 1]");
    if (r == 0.0) return 0.0;
    const double a = 1.0 - std::sqrt(r);
    const double b = 1.0 + std::sqrt(r);
    const double a2 = a * a;
    const double b2 = b * b;
    const double span = b2 - a2;
    // y(phi)^2 = a2 cos^2 + b2 sin^2 turns both square-root factors into
    // sin * cos, leaving a smooth integrand on [0, pi/2]
    const auto integrand = [&](double phi) {
        const double s = std::sin(phi);
        const double c = std::cos(phi);
        if (a == 0.0) return b2 * b * s * c * c;
        const double y = std::sqrt(a2 * c * c + b2 * s * s);
        return span * span * s * s * c * c / y;
    };
    return integrate(integrand, 0.0, 0.5 * kPi, 1e-12);
}

double hyp2f1(double a, double b, double c, double x) {
    if (c <= 0.0 && c == std::floor(c))
        throw ValidationError("hyp2f1: c must not be a nonpositive integer");
    if (!(x >= 0.0 && x <= 1.0)) throw ValidationError("hyp2f1: x must lie in [0, 1]");
    if (x == 1.0 && !(c - a - b > 0.0))
        throw ValidationError("hyp2f1: series diverges at x = 1 for these parameters");

    double sum = 1.0;
    double term = 1.0;
    for (int k = 0; k < 100000; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
        sum += term;
        if (term == 0.0 || std::abs(term) < 1e-16 * std::abs(sum)) break;
    }
    return sum;
}

double expected_trace_norm_exact(const RatioRegime& regime) {
    const double m = static_cast<double>(regime.m);
    return m * std::sqrt(m) / kPi * elliptic_f(regime.r);
}

double expected_trace_norm_lower(const RatioRegime& regime) {
    const double k = static_cast<double>(regime.k);
    const double m = static_cast<double>(regime.m);
    return k * std::sqrt(m) * std::sqrt(1.0 - regime.r * bound_coefficient());
}

double expected_pgm_bound(double r) {
    if (!(r > 0.0)) throw ValidationError("expected_pgm_bound: r must be positive");
    const double c = bound_coefficient();
    if (r <= 1.0) return 1.0 - r * c;
    return (1.0 - c / r) / r;
}

double break_even_ratio() {
    double lo = 1.0;
    double hi = 3.0;
    // expected_pgm_bound is decreasing on [1, 3] and brackets 1/2
    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (expected_pgm_bound(mid) > 0.5)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double sphere_tail(std::size_t n, std::size_t d, double eps) {
    if (eps < 0.0) throw ValidationError("sphere_tail: eps must be nonnegative");
    const double c = 1.0 / (18.0 * kPi * kPi * kPi);
    const double dims = 2.0 * static_cast<double>(n) * static_cast<double>(d) + 1.0;
    return 2.0 * std::exp(-c * dims * eps * eps / 2.0);
}

double cube_tail(std::size_t big_n, std::size_t big_d, double eps) {
    if (eps < 0.0) throw ValidationError("cube_tail: eps must be nonnegative");
    const double nd = static_cast<double>(big_n) * static_cast<double>(big_d);
    return 2.0 * std::exp(-nd * eps * eps / 8.0);
}

ConcavityReport g_concavity_check(std::size_t grid_size) {
    if (grid_size < 3) throw ValidationError("g_concavity_check: grid_size must be >= 3");
    const double c = bound_coefficient();
    std::vector<double> g(grid_size);
    ConcavityReport report;
    report.min_chord_margin = 1.0;
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double r = static_cast<double>(i) / static_cast<double>(grid_size - 1);
        const double v = hyp2f1(-0.5, 0.5, 2.0, r);
        g[i] = v * v;
        report.min_chord_margin = std::min(report.min_chord_margin, g[i] - (1.0 - r * c));
    }
    report.max_second_difference = -1.0;
    for (std::size_t i = 1; i + 1 < grid_size; ++i)
        report.max_second_difference =
            std::max(report.max_second_difference, g[i + 1] - 2.0 * g[i] + g[i - 1]);
    report.pass = report.max_second_difference <= 1e-8 && report.min_chord_margin >= -1e-9;
    return report;
}

}  // namespace statedist
