// Ensembles of quantum states with a priori probabilities, their state
// matrices, Gram matrices and density matrices, plus file serialization.
//
// Conventions: an ensemble holds n states in d dimensions. The state matrix
// S is d x n with column i equal to sqrt(p_i) |psi_i>; G = S^dag S is the
// n x n Gram matrix of the probability-renormalized states; the ensemble
// density matrix is rho = S S^dag (pure) or sum_i p_i rho_i (mixed).
#pragma once

#include <string>
#include <variant>
#include <vector>

#include "statedist/complex_matrix.hpp"

namespace statedist {

struct PureEnsemble {
    std::size_t dim = 0;                    // d
    std::vector<std::vector<cplx>> states;  // n unit vectors of length dim
    std::vector<double> probs;              // n nonnegative, summing to 1

    std::size_t size() const { return states.size(); }
};

struct MixedEnsemble {
    std::size_t dim = 0;
    std::vector<ComplexMatrix> states;  // n Hermitian PSD trace-1 matrices
    std::vector<double> probs;

    std::size_t size() const { return states.size(); }
};

// Hermitian PSD trace-1 matrix of renormalized inner products.
struct GramMatrix {
    ComplexMatrix mat;

    std::size_t size() const { return mat.rows(); }
};

// Validates unit norms (|norm - 1| <= 1e-9) and probabilities
// (|sum - 1| <= 1e-9, all >= 0; renormalized to exact sum 1).
// An empty probs vector means uniform 1/n.
PureEnsemble make_pure_ensemble(std::vector<std::vector<cplx>> vectors,
                                std::vector<double> probs = {});

// Validates each state: Hermitian within 1e-10, eigenvalues >= -1e-10,
// trace within 1e-9 of 1. Probabilities as for pure ensembles.
MixedEnsemble make_mixed_ensemble(std::vector<ComplexMatrix> states,
                                  std::vector<double> probs = {});

// d x n matrix with column i = sqrt(p_i) |psi_i>; unit Frobenius norm.
ComplexMatrix state_matrix(const PureEnsemble& e);

GramMatrix gram(const PureEnsemble& e);

ComplexMatrix density(const PureEnsemble& e);
ComplexMatrix density(const MixedEnsemble& e);

// --- file format -----------------------------------------------------------
//
// UTF-8 JSON document:
//   {
//     "dim":    <int>,
//     "kind":   "pure" | "mixed",
//     "probs":  [<decimal>, ...],
//     "states": pure:  [[[re, im] x dim], ...]           (one array per state)
//               mixed: [[[re, im] x dim*dim], ...]       (row-major matrices)
//   }
// Decimals are written with 17 significant digits so that a write/read
// round trip reproduces every double exactly.

using Ensemble = std::variant<PureEnsemble, MixedEnsemble>;

std::string serialize_ensemble(const PureEnsemble& e);
std::string serialize_ensemble(const MixedEnsemble& e);
std::string serialize_ensemble(const Ensemble& e);

// Throws ParseError for malformed documents, ValidationError when the
// document parses but violates an ensemble invariant.
Ensemble deserialize_ensemble(const std::string& text);

Ensemble load_ensemble(const std::string& path);
void save_ensemble(const Ensemble& e, const std::string& path);

// 17-significant-digit decimal form used by all writers.
std::string format_decimal(double v);

}  // namespace statedist
