// Random-matrix expectations for the distinguishability of random states:
// Marchenko-Pastur densities, the expected-trace-norm integral and its
// closed-form lower bound, the Gauss hypergeometric series backing both,
// and the sphere/cube concentration tail formulas.
#pragma once

#include <cstddef>

namespace statedist {

// Shape parameters of a d x n random matrix family: k = min(n, d),
// m = max(n, d), r = k/m, A = 1 - sqrt(r), B = 1 + sqrt(r).
struct RatioRegime {
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t k = 0;
    std::size_t m = 0;
    double r = 0.0;
    double A = 0.0;
    double B = 0.0;
};

RatioRegime make_ratio_regime(std::size_t n, std::size_t d);

// Limiting eigenvalue density of (1/n) R R^dag:
// sqrt((x - A^2)(B^2 - x)) / (2 pi r x) on [A^2, B^2], zero elsewhere.
double mp_eigen_density(double x, double r);

// Limiting singular-value density of R/sqrt(m):
// sqrt((y^2 - A^2)(B^2 - y^2)) / (pi r y) on [A, B], zero elsewhere.
double mp_singular_density(double y, double r);

// Integral of mp_eigen_density from the lower support edge to x.
double mp_eigen_cdf(double x, double r);

// f(r) = integral_A^B sqrt((y^2 - A^2)(B^2 - y^2)) dy, 0 <= r <= 1,
// by adaptive quadrature after a trigonometric substitution that removes
// the square-root endpoint behaviour. Equals pi r 2F1(-1/2, 1/2; 2; r).
double elliptic_f(double r);

// Gauss hypergeometric series sum_k (a)_k (b)_k / ((c)_k k!) x^k for
// x in [0, 1]; terms are accumulated until |term| < 1e-16 |sum| or a
// 100000-term cap. x = 1 requires c - a - b > 0.
double hyp2f1(double a, double b, double c, double x);

// Asymptotic expected trace norm of a d x n matrix with unit-variance
// entries: (m^(3/2) / pi) f(r).
double expected_trace_norm_exact(const RatioRegime& regime);

// Closed-form lower bound k sqrt(m) sqrt(1 - r (1 - 64/(9 pi^2)));
// equals the exact value at r = 1.
double expected_trace_norm_lower(const RatioRegime& regime);

// Asymptotic lower bound on E(P^pgm) for n = r d random states:
//   1 - r (1 - 64/(9 pi^2))                    r <= 1
//   (1/r) (1 - (1/r) (1 - 64/(9 pi^2)))        r >  1
double expected_pgm_bound(double r);

// The ratio r >= 1 at which expected_pgm_bound crosses 1/2, located by
// bisection: 1 + sqrt(1 - 2 (1 - 64/(9 pi^2))) ~ 1.664.
double break_even_ratio();

// Tail bound for uniformly random states (Levy's lemma on the sphere):
// 2 exp(-C (2nd + 1) eps^2 / 2) with C = 1/(18 pi^3). Returned raw; may
// exceed 1.
double sphere_tail(std::size_t n, std::size_t d, double eps);

// Tail bound for random oracle states (concentration on the hypercube):
// 2 exp(-N D eps^2 / 8). Returned raw.
double cube_tail(std::size_t big_n, std::size_t big_d, double eps);

struct ConcavityReport {
    double max_second_difference = 0.0;  // max g(r+h) - 2 g(r) + g(r-h)
    double min_chord_margin = 0.0;       // min g(r) - (1 - r (1 - 64/(9 pi^2)))
    bool pass = false;
};

// Numerical concavity witness for g(r) = 2F1(-1/2, 1/2; 2; r)^2 on a
// uniform grid of grid_size points spanning [0, 1] (grid_size >= 3).
ConcavityReport g_concavity_check(std::size_t grid_size);

}  // namespace statedist
