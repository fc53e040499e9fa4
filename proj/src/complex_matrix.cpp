#include "statedist/complex_matrix.hpp"

#include <cmath>

namespace statedist {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    const std::size_t n = rows_ < cols_ ? rows_ : cols_;
    for (std::size_t i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::entrywise_one_norm() const {
    double s = 0.0;
    for (const cplx& v : data_) s += std::abs(v);
    return s;
}

double ComplexMatrix::max_abs() const {
    double s = 0.0;
    for (const cplx& v : data_) s = std::max(s, std::abs(v));
    return s;
}

double ComplexMatrix::hermitian_deviation() const {
    if (rows_ != cols_) throw ValidationError("hermitian_deviation: matrix not square");
    double dev = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            dev = std::max(dev, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return dev;
}

void ComplexMatrix::hermitize() {
    if (rows_ != cols_) throw ValidationError("hermitize: matrix not square");
    for (std::size_t i = 0; i < rows_; ++i) {
        (*this)(i, i) = (*this)(i, i).real();
        for (std::size_t j = i + 1; j < cols_; ++j) {
            const cplx avg = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
            (*this)(i, j) = avg;
            (*this)(j, i) = std::conj(avg);
        }
    }
}

bool ComplexMatrix::all_finite() const {
    for (const cplx& v : data_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ValidationError("matrix addition: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ValidationError("matrix subtraction: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(double scale) {
    for (cplx& v : data_) v *= scale;
    return *this;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw ValidationError("matrix multiply: shape mismatch");
    ComplexMatrix c(a.rows(), b.cols());
    const std::size_t n = b.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx* ci = c.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx t = a(i, k);
            if (t == cplx(0.0)) continue;
            const cplx* bk = b.row(k);
            for (std::size_t j = 0; j < n; ++j) ci[j] += t * bk[j];
        }
    }
    return c;
}

ComplexMatrix gram_of(const ComplexMatrix& a) {
    ComplexMatrix g(a.cols(), a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) {
        for (std::size_t j = i; j < a.cols(); ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < a.rows(); ++k) s += std::conj(a(k, i)) * a(k, j);
            g(i, j) = s;
            g(j, i) = std::conj(s);
        }
        g(i, i) = g(i, i).real();
    }
    return g;
}

ComplexMatrix outer_gram_of(const ComplexMatrix& a) {
    ComplexMatrix g(a.rows(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const cplx* ri = a.row(i);
        for (std::size_t j = i; j < a.rows(); ++j) {
            const cplx* rj = a.row(j);
            cplx s = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) s += ri[k] * std::conj(rj[k]);
            g(i, j) = s;
            g(j, i) = std::conj(s);
        }
        g(i, i) = g(i, i).real();
    }
    return g;
}

ComplexMatrix projector(const std::vector<cplx>& v) {
    ComplexMatrix p(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) p(i, j) = v[i] * std::conj(v[j]);
    return p;
}

double trace_product_real(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.cols() || a.cols() != b.rows())
        throw ValidationError("trace_product: shape mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            s += (a(i, j) * b(j, i)).real();
    return s;
}

cplx quadratic_form(const std::vector<cplx>& v, const ComplexMatrix& m) {
    if (m.rows() != v.size() || m.cols() != v.size())
        throw ValidationError("quadratic_form: shape mismatch");
    cplx s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const cplx* ri = m.row(i);
        cplx row = 0.0;
        for (std::size_t j = 0; j < v.size(); ++j) row += ri[j] * v[j];
        s += std::conj(v[i]) * row;
    }
    return s;
}

}  // namespace statedist
