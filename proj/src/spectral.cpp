#include "statedist/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace statedist {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr int kMaxSweeps = 100;

double off_diagonal_frobenius(const std::vector<cplx>& a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a[i * n + j]);
    return std::sqrt(2.0 * s);
}

// Cyclic Jacobi on a Hermitian matrix stored row-major in `a` (both
// triangles kept in sync). When `w` is non-null it accumulates the product
// of the applied rotations row-wise, so that w a0 w^dag is diagonal and the
// eigenvector for diagonal slot j is the conjugate of row j of w.
void jacobi_hermitian(std::vector<cplx>& a, std::size_t n, std::vector<cplx>* w) {
    if (w) {
        w->assign(n * n, cplx(0.0));
        for (std::size_t i = 0; i < n; ++i) (*w)[i * n + i] = 1.0;
    }
    if (n < 2) return;

    double scale = 0.0;
    for (const cplx& v : a) scale += std::norm(v);
    scale = std::sqrt(scale);
    if (scale == 0.0) return;

    const double target = 1e-14 * scale;
    // rotations on elements below this cannot matter for convergence
    const double skip = target / static_cast<double>(n);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_frobenius(a, n) <= target) return;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx g = a[p * n + q];
                const double absg = std::abs(g);
                if (absg <= skip) continue;

                const double app = a[p * n + p].real();
                const double aqq = a[q * n + q].real();
                const double tau = (app - aqq) / (2.0 * absg);
                double t;
                if (std::abs(tau) > 1e150) {
                    t = 1.0 / (2.0 * tau);
                } else {
                    const double root = std::sqrt(1.0 + tau * tau);
                    t = (tau >= 0.0) ? 1.0 / (tau + root) : 1.0 / (tau - root);
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx u = g / absg;        // phase of the pivot
                const cplx su = s * u;
                const cplx suc = s * std::conj(u);

                cplx* rp = a.data() + p * n;
                cplx* rq = a.data() + q * n;
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = rp[k];
                    const cplx akq = rq[k];
                    rp[k] = c * akp + su * akq;
                    rq[k] = c * akq - suc * akp;
                }
                // exact values for the rotated 2x2 block
                const double shift = t * absg;
                rp[p] = app + shift;
                rq[q] = aqq - shift;
                rp[q] = 0.0;
                rq[p] = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    a[k * n + p] = std::conj(rp[k]);
                    a[k * n + q] = std::conj(rq[k]);
                }

                if (w) {
                    cplx* wp = w->data() + p * n;
                    cplx* wq = w->data() + q * n;
                    for (std::size_t k = 0; k < n; ++k) {
                        const cplx wkp = wp[k];
                        const cplx wkq = wq[k];
                        wp[k] = c * wkp + su * wkq;
                        wq[k] = c * wkq - suc * wkp;
                    }
                }
            }
        }
    }
    if (off_diagonal_frobenius(a, n) > target)
        throw std::runtime_error("eig_hermitian: Jacobi failed to converge within sweep cap");
}

std::vector<cplx> checked_hermitian_copy(const ComplexMatrix& h) {
    if (h.rows() != h.cols()) throw ValidationError("eig_hermitian: matrix not square");
    if (h.hermitian_deviation() > kHermitianTol)
        throw ValidationError("eig_hermitian: input not Hermitian within tolerance");
    const std::size_t n = h.rows();
    std::vector<cplx> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i * n + i] = h(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx avg = 0.5 * (h(i, j) + std::conj(h(j, i)));
            a[i * n + j] = avg;
            a[j * n + i] = std::conj(avg);
        }
    }
    return a;
}

// numerical-rank floor: eigenvalues with |lambda| at or below this are
// indistinguishable from a null direction of a PSD operator at double
// precision, and square roots of that noise would otherwise pollute
// spectral sums at the 1e-9 scale
double support_floor(const std::vector<double>& values) {
    double amax = 0.0;
    for (double v : values) amax = std::max(amax, std::abs(v));
    return kSupportRelTol * amax;
}

std::vector<std::size_t> descending_order(const std::vector<double>& values) {
    std::vector<std::size_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t i, std::size_t j) { return values[i] > values[j]; });
    return idx;
}

// U f(D) U^dag for a spectral function applied entrywise to eigenvalues.
ComplexMatrix assemble(const SpectralDecomposition& sd, const std::vector<double>& f) {
    const std::size_t n = sd.eigenvalues.size();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (f[k] == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const cplx uik = sd.eigenvectors(i, k) * f[k];
            for (std::size_t j = i; j < n; ++j)
                out(i, j) += uik * std::conj(sd.eigenvectors(j, k));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = out(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) out(j, i) = std::conj(out(i, j));
    }
    return out;
}

}  // namespace

SpectralDecomposition eig_hermitian(const ComplexMatrix& h) {
    const std::size_t n = h.rows();
    std::vector<cplx> a = checked_hermitian_copy(h);
    std::vector<cplx> w;
    jacobi_hermitian(a, n, &w);

    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = a[i * n + i].real();
    const std::vector<std::size_t> order = descending_order(values);

    SpectralDecomposition sd;
    sd.eigenvalues.resize(n);
    sd.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        sd.eigenvalues[j] = values[src];
        for (std::size_t i = 0; i < n; ++i)
            sd.eigenvectors(i, j) = std::conj(w[src * n + i]);
    }
    return sd;
}

std::vector<double> eig_hermitian_values(const ComplexMatrix& h) {
    const std::size_t n = h.rows();
    std::vector<cplx> a = checked_hermitian_copy(h);
    jacobi_hermitian(a, n, nullptr);
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = a[i * n + i].real();
    std::sort(values.begin(), values.end(), std::greater<double>());
    return values;
}

ComplexMatrix matrix_sqrt(const ComplexMatrix& h) {
    SpectralDecomposition sd = eig_hermitian(h);
    const double floor = support_floor(sd.eigenvalues);
    std::vector<double> f(sd.eigenvalues.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
        const double lambda = sd.eigenvalues[k];
        if (lambda < -1e-6) throw ValidationError("matrix_sqrt: input not PSD");
        f[k] = (lambda <= floor) ? 0.0 : std::sqrt(lambda);
    }
    return assemble(sd, f);
}

ComplexMatrix inv_sqrt_on_support(const ComplexMatrix& h, double rel_tol) {
    SpectralDecomposition sd = eig_hermitian(h);
    double lambda_max = 0.0;
    for (double v : sd.eigenvalues) lambda_max = std::max(lambda_max, v);
    if (lambda_max <= 0.0)
        throw ValidationError("inv_sqrt_on_support: zero operator has no support");

    std::vector<double> f(sd.eigenvalues.size());
    const double cut = rel_tol * lambda_max;
    for (std::size_t k = 0; k < f.size(); ++k) {
        const double lambda = sd.eigenvalues[k];
        f[k] = (lambda <= cut) ? 0.0 : 1.0 / std::sqrt(lambda);
    }
    return assemble(sd, f);
}

double trace_norm(const ComplexMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    const ComplexMatrix g = (m.cols() <= m.rows()) ? gram_of(m) : outer_gram_of(m);
    const std::vector<double> eigs = eig_hermitian_values(g);
    const double floor = support_floor(eigs);
    double s = 0.0;
    for (double lambda : eigs)
        if (lambda > floor) s += std::sqrt(lambda);
    return s;
}

double fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
        throw ValidationError("fidelity: dimension mismatch");
    const ComplexMatrix root = matrix_sqrt(rho);
    ComplexMatrix inner = multiply(multiply(root, sigma), root);
    inner.hermitize();
    const std::vector<double> eigs = eig_hermitian_values(inner);
    const double floor = support_floor(eigs);
    double s = 0.0;
    for (double lambda : eigs)
        if (lambda > floor) s += std::sqrt(lambda);
    return s * s;
}

double purity(const ComplexMatrix& rho) {
    if (rho.rows() != rho.cols()) throw ValidationError("purity: matrix not square");
    // tr(rho^2) = ||rho||_F^2 for Hermitian rho
    const double f = rho.frobenius_norm();
    return f * f;
}

}  // namespace statedist
