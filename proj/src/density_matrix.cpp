#include "abring/density_matrix.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace abring {

namespace {
constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kEigenvalueFloor = -1e-9;
}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::optional<BipartiteSplit> split)
    : matrix_(std::move(matrix)), split_(split) {
    if (matrix_.dim() == 0) throw std::invalid_argument("DensityMatrix: empty matrix");
    const double defect = matrix_.hermiticity_defect();
    if (defect > kHermitianTol) {
        std::ostringstream msg;
        msg << "DensityMatrix: not Hermitian, defect " << defect;
        throw std::invalid_argument(msg.str());
    }
    const Complex tr = matrix_.trace();
    if (std::abs(tr - Complex{1.0, 0.0}) > kTraceTol) {
        std::ostringstream msg;
        msg << "DensityMatrix: trace " << std::real(tr) << " not 1 within " << kTraceTol;
        throw std::invalid_argument(msg.str());
    }
    if (split_) {
        if (split_->dim_s * split_->dim_r != matrix_.dim() || split_->dim_s == 0 || split_->dim_r == 0) {
            throw std::invalid_argument("DensityMatrix: split dimensions do not factor the matrix dimension");
        }
    }
    spectrum_ = hermitian_eigendecompose(matrix_);
    const double smallest = spectrum_.eigenvalues.back();
    if (smallest < kEigenvalueFloor) {
        std::ostringstream msg;
        msg << "DensityMatrix: eigenvalue " << smallest << " below " << kEigenvalueFloor;
        throw std::invalid_argument(msg.str());
    }
}

DensityMatrix DensityMatrix::pure(const Ket& ket, std::optional<BipartiteSplit> split) {
    return DensityMatrix(ComplexMatrix::projector(normalized(ket)), split);
}

std::vector<double> DensityMatrix::clamped_eigenvalues() const {
    std::vector<double> out = spectrum_.eigenvalues;
    for (double& p : out) {
        if (p < 0.0) p = 0.0;
        if (p > 1.0) p = 1.0;
    }
    return out;
}

double DensityMatrix::purity() const {
    double s = 0.0;
    for (double p : spectrum_.eigenvalues) s += p * p;
    return s;
}

DensityMatrix DensityMatrix::with_split(BipartiteSplit split) const {
    return DensityMatrix(matrix_, split);
}

DensityMatrix partial_trace(const DensityMatrix& rho, Keep keep) {
    if (!rho.split()) {
        throw std::invalid_argument("partial_trace: density matrix carries no bipartite split");
    }
    const std::size_t ds = rho.split()->dim_s;
    const std::size_t dr = rho.split()->dim_r;
    const ComplexMatrix& m = rho.matrix();

    if (keep == Keep::S) {
        ComplexMatrix out(ds);
        for (std::size_t i = 0; i < ds; ++i) {
            for (std::size_t j = 0; j < ds; ++j) {
                Complex s = 0.0;
                for (std::size_t k = 0; k < dr; ++k) s += m(i * dr + k, j * dr + k);
                out(i, j) = s;
            }
        }
        return DensityMatrix(std::move(out));
    }
    ComplexMatrix out(dr);
    for (std::size_t k = 0; k < dr; ++k) {
        for (std::size_t l = 0; l < dr; ++l) {
            Complex s = 0.0;
            for (std::size_t i = 0; i < ds; ++i) s += m(i * dr + k, i * dr + l);
            out(k, l) = s;
        }
    }
    return DensityMatrix(std::move(out));
}

}  // namespace abring
