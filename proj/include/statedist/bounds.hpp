// Analytic lower bounds on the PGM success probability and the exact
// closed forms for constant-inner-product ensembles.
#pragma once

#include "statedist/ensemble.hpp"

namespace statedist {

struct TangentParabola {
    double a = 0.0;
    double b = 0.0;
};

struct BoundReport {
    double pgm_exact = 0.0;
    double inner_product_bound = 0.0;
    double eigenvalue_bound = 0.0;
    double guessing_baseline = 0.0;  // sum_i p_i^2
    bool inner_product_ok = false;   // inner_product_bound <= pgm_exact + 1e-9
    bool eigenvalue_ok = false;      // eigenvalue_bound   <= pgm_exact + 1e-9
};

// Coefficients of f(x) = a x + b x^2, the parabola tangent to sqrt(x) at
// x = r and lying below it everywhere on x >= 0: a = 3/(2 sqrt(r)),
// b = -1/(2 r^(3/2)). Requires r > 0.
TangentParabola tangent_parabola(double r);

// sum_i p_i^2 / (sum_j p_j |<psi_i|psi_j>|^2); always >= sum_i p_i^2.
// Rows with p_i = 0 contribute 0.
double inner_product_bound(const PureEnsemble& e);

// (1/n) (sum_i sqrt(lambda_i))^2 over the Gram spectrum; coincides with
// the fidelity of G with the maximally mixed state I/n.
double eigenvalue_bound(const GramMatrix& g);

// sum_i p_i^2 tr(rho_i^2) / (sum_j p_j F(rho_i, rho_j)).
double mixed_fidelity_bound(const MixedEnsemble& e);

// sum_i p_i^2 / (sum_j p_j F(rho_i, rho_j)). Not a valid lower bound for
// mixed states; exposed for comparison reporting only.
double naive_mixed_bound(const MixedEnsemble& e);

// Gram matrix with G_ii = 1/n, G_ij = p/n (i != n). Requires 0 <= p < 1.
GramMatrix constant_overlap_gram(std::size_t n, double p);

// Exact PGM success for any ensemble realizing constant_overlap_gram(n, p):
// (1/n) (sqrt(p + (1-p)/n) + (n-1) sqrt((1-p)/n))^2.
double constant_overlap_exact(std::size_t n, double p);

// Explicit n-dimensional ensemble with the given Gram matrix: columns of
// sqrt(G), normalized, with p_i = G_ii. Zero columns become basis states
// with probability zero.
PureEnsemble realize_gram(const GramMatrix& g);

BoundReport bound_report(const PureEnsemble& e);

}  // namespace statedist
