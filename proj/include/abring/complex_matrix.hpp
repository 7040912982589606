#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace abring {

using Complex = std::complex<double>;
using Ket = std::vector<Complex>;

// Dense square complex matrix, row-major storage. All states and operators
// in this library live in dimensions of a few dozen at most, so everything
// is kept as plain contiguous doubles with no sparsity tricks.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
    ComplexMatrix(std::size_t dim, std::initializer_list<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);
    // |u><v|
    static ComplexMatrix outer(const Ket& u, const Ket& v);
    // |u><u|
    static ComplexMatrix projector(const Ket& u) { return outer(u, u); }

    std::size_t dim() const { return dim_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;

    // max_ij |M(i,j) - conj(M(j,i))|
    double hermiticity_defect() const;
    bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect() <= tol; }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex scalar);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(Complex scalar, ComplexMatrix m) { return m *= scalar; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    Ket apply(const Ket& v) const;

    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
        return a.dim_ == b.dim_ && a.data_ == b.data_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

// max_ij |A(i,j) - B(i,j)|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product; (A (x) B)(i*dB+k, j*dB+l) = A(i,j) B(k,l).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
Ket tensor(const Ket& a, const Ket& b);

Complex inner(const Ket& a, const Ket& b);  // <a|b>
double norm(const Ket& v);
Ket normalized(Ket v);

}  // namespace abring
