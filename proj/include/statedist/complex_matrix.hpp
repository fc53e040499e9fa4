// Dense complex matrices with row-major storage.
//
// Sized for desk-scale numerics (dimension <= 4096). All arithmetic is
// double precision; quantities named "norm" follow these conventions:
//   frobenius_norm   sqrt(sum |a_ij|^2)
//   entrywise_one_norm  sum |a_ij|   (not the operator 1-norm)
#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace statedist {

using cplx = std::complex<double>;

// Thrown when an input violates a documented precondition or invariant.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a document cannot be parsed at all (vs. failing validation).
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    cplx* row(std::size_t i) { return data_.data() + i * cols_; }
    const cplx* row(std::size_t i) const { return data_.data() + i * cols_; }

    ComplexMatrix adjoint() const;
    cplx trace() const;

    double frobenius_norm() const;
    double entrywise_one_norm() const;
    double max_abs() const;

    // max_ij |a_ij - conj(a_ji)|; zero for an exactly Hermitian matrix
    double hermitian_deviation() const;
    // replace with (A + A^dag)/2
    void hermitize();

    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(double scale);
    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= s; }
    friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= s; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

// a^dag * a, hermitized
ComplexMatrix gram_of(const ComplexMatrix& a);
// a * a^dag, hermitized
ComplexMatrix outer_gram_of(const ComplexMatrix& a);

// column vector v -> v v^dag
ComplexMatrix projector(const std::vector<cplx>& v);

// Re tr(a b); exact for products of Hermitian matrices
double trace_product_real(const ComplexMatrix& a, const ComplexMatrix& b);

// <v| m |v>
cplx quadratic_form(const std::vector<cplx>& v, const ComplexMatrix& m);

}  // namespace statedist
