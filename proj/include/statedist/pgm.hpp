// The pretty good measurement: construction, exact success probabilities,
// POVM validation, and the two-state optimal (Helstrom) reference value.
#pragma once

#include <vector>

#include "statedist/complex_matrix.hpp"
#include "statedist/ensemble.hpp"

namespace statedist {

// Positive operators summing to the identity on the ensemble support.
struct Povm {
    std::vector<ComplexMatrix> elements;

    std::size_t size() const { return elements.size(); }
};

struct PovmReport {
    double max_psd_violation = 0.0;        // max over elements of -lambda_min, clamped at 0
    double max_completeness_deviation = 0.0;  // max entry of |sum M_i - I|
    bool pass = false;                     // both <= 1e-8
};

// Exact PGM success probability sum_i (sqrt(G))_ii^2, evaluated from the
// n x n Gram matrix when n < d and from the d x d density matrix otherwise.
double pgm_success_pure(const PureEnsemble& e);

// sum_i tr(rho^{-1/2} rho'_i rho^{-1/2} rho'_i) with rho'_i = p_i rho_i.
double pgm_success_mixed(const MixedEnsemble& e);

// Measurement operators M_i = rho^{-1/2} rho'_i rho^{-1/2}; for a pure
// ensemble these are rank-one projectors onto rho^{-1/2} |psi'_i>.
// States with probability zero get the zero operator.
Povm pgm_measurement(const PureEnsemble& e);
Povm pgm_measurement(const MixedEnsemble& e);

// sum_i tr(M_i rho'_i); requires one element per state of matching dimension.
double povm_success(const PureEnsemble& e, const Povm& m);
double povm_success(const MixedEnsemble& e, const Povm& m);

// Optimal two-state success probability (1 + ||p1 rho1 - p2 rho2||_tr) / 2.
// Requires p1 + p2 = 1 within 1e-9 and equal dimensions.
double helstrom_two_state(const ComplexMatrix& rho1, double p1,
                          const ComplexMatrix& rho2, double p2);

// Reports PSD and completeness deviations against the d x d identity.
PovmReport validate_povm(const Povm& m, std::size_t dim);

}  // namespace statedist
