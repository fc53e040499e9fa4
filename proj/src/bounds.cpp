#include "statedist/bounds.hpp"

#include <cmath>

#include "statedist/pgm.hpp"
#include "statedist/spectral.hpp"

namespace statedist {

TangentParabola tangent_parabola(double r) {
    if (!(r > 0.0)) throw ValidationError("tangent_parabola: r must be positive");
    const double root = std::sqrt(r);
    return {1.5 / root, -0.5 / (r * root)};
}

double inner_product_bound(const PureEnsemble& e) {
    const ComplexMatrix g = gram(e).mat;
    const std::size_t n = g.rows();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double gii = g(i, i).real();
        if (gii == 0.0) continue;  // zero-probability state contributes 0
        double denom = 0.0;
        for (std::size_t j = 0; j < n; ++j) denom += std::norm(g(i, j));
        total += gii * gii * gii / denom;
    }
    return total;
}

double eigenvalue_bound(const GramMatrix& g) {
    const std::vector<double> eigs = eig_hermitian_values(g.mat);
    double lambda_max = 0.0;
    for (double v : eigs) lambda_max = std::max(lambda_max, std::abs(v));
    const double floor = kSupportRelTol * lambda_max;
    double sum_roots = 0.0;
    for (double lambda : eigs)
        if (lambda > floor) sum_roots += std::sqrt(lambda);
    return sum_roots * sum_roots / static_cast<double>(g.size());
}

namespace {

// Pairwise fidelities weighted by probabilities: denom_i = sum_j p_j F(rho_i, rho_j)
std::vector<double> fidelity_denominators(const MixedEnsemble& e) {
    const std::size_t n = e.size();
    std::vector<double> f(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        f[i * n + i] = 1.0;  // trace-1 states have unit self-fidelity
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = fidelity(e.states[i], e.states[j]);
            f[i * n + j] = v;
            f[j * n + i] = v;
        }
    }
    std::vector<double> denom(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) denom[i] += e.probs[j] * f[i * n + j];
    return denom;
}

}  // namespace

double mixed_fidelity_bound(const MixedEnsemble& e) {
    const std::vector<double> denom = fidelity_denominators(e);
    double total = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e.probs[i] == 0.0 || denom[i] == 0.0) continue;
        total += e.probs[i] * e.probs[i] * purity(e.states[i]) / denom[i];
    }
    return total;
}

double naive_mixed_bound(const MixedEnsemble& e) {
    const std::vector<double> denom = fidelity_denominators(e);
    double total = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e.probs[i] == 0.0 || denom[i] == 0.0) continue;
        total += e.probs[i] * e.probs[i] / denom[i];
    }
    return total;
}

GramMatrix constant_overlap_gram(std::size_t n, double p) {
    if (n < 1) throw ValidationError("constant_overlap_gram: n must be >= 1");
    if (!(p >= 0.0 && p < 1.0)) throw ValidationError("constant_overlap_gram: p must be in [0, 1)");
    ComplexMatrix g(n, n);
    const double diag = 1.0 / static_cast<double>(n);
    const double off = p / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = (i == j) ? diag : off;
    return GramMatrix{std::move(g)};
}

double constant_overlap_exact(std::size_t n, double p) {
    if (n < 1) throw ValidationError("constant_overlap_exact: n must be >= 1");
    if (!(p >= 0.0 && p < 1.0))
        throw ValidationError("constant_overlap_exact: p must be in [0, 1)");
    const double nn = static_cast<double>(n);
    const double rest = (1.0 - p) / nn;
    const double s = std::sqrt(p + rest) + (nn - 1.0) * std::sqrt(rest);
    return s * s / nn;
}

PureEnsemble realize_gram(const GramMatrix& g) {
    const std::size_t n = g.size();
    const ComplexMatrix root = matrix_sqrt(g.mat);
    std::vector<std::vector<cplx>> states(n, std::vector<cplx>(n, cplx(0.0)));
    std::vector<double> probs(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double norm2 = 0.0;
        for (std::size_t k = 0; k < n; ++k) norm2 += std::norm(root(k, i));
        if (norm2 <= 0.0) {
            states[i][i] = 1.0;  // basis filler for a zero column
            continue;
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t k = 0; k < n; ++k) states[i][k] = inv * root(k, i);
        probs[i] = norm2;
    }
    return make_pure_ensemble(std::move(states), std::move(probs));
}

BoundReport bound_report(const PureEnsemble& e) {
    BoundReport report;
    report.pgm_exact = pgm_success_pure(e);
    report.inner_product_bound = inner_product_bound(e);
    report.eigenvalue_bound = eigenvalue_bound(gram(e));
    double guessing = 0.0;
    for (double p : e.probs) guessing += p * p;
    report.guessing_baseline = guessing;
    report.inner_product_ok = report.inner_product_bound <= report.pgm_exact + 1e-9;
    report.eigenvalue_ok = report.eigenvalue_bound <= report.pgm_exact + 1e-9;
    return report;
}

}  // namespace statedist
