#include "statedist/pgm.hpp"

#include <cmath>

#include "statedist/spectral.hpp"

namespace statedist {

namespace {

// sum_i (sqrt(G))_ii^2 with eigenvalues below the support cutoff treated
// as zero, matching the support convention of inv_sqrt_on_support so the
// Gram-side and density-side evaluations agree on rank-deficient input.
double pgm_from_gram(const ComplexMatrix& g) {
    const SpectralDecomposition sd = eig_hermitian(g);
    double lambda_max = 0.0;
    for (double v : sd.eigenvalues) lambda_max = std::max(lambda_max, v);
    const double cut = kSupportRelTol * lambda_max;

    const std::size_t n = g.rows();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double diag = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double lambda = sd.eigenvalues[k];
            if (lambda <= cut) continue;
            diag += std::sqrt(lambda) * std::norm(sd.eigenvectors(i, k));
        }
        total += diag * diag;
    }
    return total;
}

std::vector<cplx> weighted_state(const PureEnsemble& e, std::size_t i) {
    std::vector<cplx> v(e.dim);
    const double w = std::sqrt(e.probs[i]);
    for (std::size_t k = 0; k < e.dim; ++k) v[k] = w * e.states[i][k];
    return v;
}

}  // namespace

double pgm_success_pure(const PureEnsemble& e) {
    if (e.size() < e.dim) return pgm_from_gram(gram(e).mat);
    // d x d route: (sqrt(G))_ii = <psi'_i| rho^{-1/2} |psi'_i>
    const ComplexMatrix root = inv_sqrt_on_support(density(e));
    double total = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e.probs[i] == 0.0) continue;
        const double diag = e.probs[i] * quadratic_form(e.states[i], root).real();
        total += diag * diag;
    }
    return total;
}

double pgm_success_mixed(const MixedEnsemble& e) {
    const ComplexMatrix root = inv_sqrt_on_support(density(e));
    double total = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e.probs[i] == 0.0) continue;
        ComplexMatrix m = multiply(multiply(root, e.states[i]), root);
        m.hermitize();
        total += e.probs[i] * e.probs[i] * trace_product_real(m, e.states[i]);
    }
    return total;
}

Povm pgm_measurement(const PureEnsemble& e) {
    const ComplexMatrix root = inv_sqrt_on_support(density(e));
    Povm povm;
    povm.elements.reserve(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e.probs[i] == 0.0) {
            povm.elements.emplace_back(e.dim, e.dim);
            continue;
        }
        std::vector<cplx> nu(e.dim, cplx(0.0));
        const std::vector<cplx> psi = weighted_state(e, i);
        for (std::size_t r = 0; r < e.dim; ++r) {
            const cplx* row = root.row(r);
            cplx s = 0.0;
            for (std::size_t c = 0; c < e.dim; ++c) s += row[c] * psi[c];
            nu[r] = s;
        }
        povm.elements.push_back(projector(nu));
    }
    return povm;
}

Povm pgm_measurement(const MixedEnsemble& e) {
    const ComplexMatrix root = inv_sqrt_on_support(density(e));
    Povm povm;
    povm.elements.reserve(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e.probs[i] == 0.0) {
            povm.elements.emplace_back(e.dim, e.dim);
            continue;
        }
        ComplexMatrix m = multiply(multiply(root, e.states[i] * e.probs[i]), root);
        m.hermitize();
        povm.elements.push_back(std::move(m));
    }
    return povm;
}

namespace {

void check_povm_shape(const Povm& m, std::size_t n, std::size_t dim) {
    if (m.size() != n) throw ValidationError("povm_success: element count mismatch");
    for (const auto& el : m.elements)
        if (el.rows() != dim || el.cols() != dim)
            throw ValidationError("povm_success: element dimension mismatch");
}

}  // namespace

double povm_success(const PureEnsemble& e, const Povm& m) {
    check_povm_shape(m, e.size(), e.dim);
    double total = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e.probs[i] == 0.0) continue;
        total += e.probs[i] * quadratic_form(e.states[i], m.elements[i]).real();
    }
    return total;
}

double povm_success(const MixedEnsemble& e, const Povm& m) {
    check_povm_shape(m, e.size(), e.dim);
    double total = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e.probs[i] == 0.0) continue;
        total += e.probs[i] * trace_product_real(m.elements[i], e.states[i]);
    }
    return total;
}

double helstrom_two_state(const ComplexMatrix& rho1, double p1,
                          const ComplexMatrix& rho2, double p2) {
    if (std::abs(p1 + p2 - 1.0) > 1e-9)
        throw ValidationError("helstrom_two_state: probability mismatch");
    if (rho1.rows() != rho2.rows() || rho1.cols() != rho2.cols())
        throw ValidationError("helstrom_two_state: dimension mismatch");
    return 0.5 * (1.0 + trace_norm(rho1 * p1 - rho2 * p2));
}

PovmReport validate_povm(const Povm& m, std::size_t dim) {
    PovmReport report;
    ComplexMatrix sum(dim, dim);
    for (const auto& el : m.elements) {
        if (el.rows() != dim || el.cols() != dim)
            throw ValidationError("validate_povm: element dimension mismatch");
        const std::vector<double> eigs = eig_hermitian_values(el);
        if (!eigs.empty() && eigs.back() < 0.0)
            report.max_psd_violation = std::max(report.max_psd_violation, -eigs.back());
        sum += el;
    }
    sum -= ComplexMatrix::identity(dim);
    report.max_completeness_deviation = sum.max_abs();
    report.pass = report.max_psd_violation <= 1e-8 && report.max_completeness_deviation <= 1e-8;
    return report;
}

}  // namespace statedist
