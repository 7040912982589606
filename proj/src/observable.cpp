#include "abring/observable.hpp"

#include "abring/eigen.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace abring {

namespace {
constexpr double kProjectorTol = 1e-10;
}

Observable::Observable(ComplexMatrix matrix, std::vector<SpectralLine> spectrum)
    : matrix_(std::move(matrix)), spectrum_(std::move(spectrum)) {
    const std::size_t n = matrix_.dim();
    ComplexMatrix sum(n);
    ComplexMatrix recon(n);
    for (std::size_t j = 0; j < spectrum_.size(); ++j) {
        const ComplexMatrix& pj = spectrum_[j].projector;
        if (pj.dim() != n) throw std::invalid_argument("Observable: projector dimension mismatch");
        if (max_abs_diff(pj * pj, pj) > kProjectorTol) {
            throw std::invalid_argument("Observable: projector not idempotent");
        }
        for (std::size_t k = j + 1; k < spectrum_.size(); ++k) {
            if ((pj * spectrum_[k].projector).max_abs() > kProjectorTol) {
                throw std::invalid_argument("Observable: projectors not mutually orthogonal");
            }
        }
        sum += pj;
        recon += Complex(spectrum_[j].eigenvalue, 0.0) * pj;
    }
    if (max_abs_diff(sum, ComplexMatrix::identity(n)) > kProjectorTol) {
        throw std::invalid_argument("Observable: projectors do not resolve the identity");
    }
    if (max_abs_diff(recon, matrix_) > kProjectorTol) {
        throw std::invalid_argument("Observable: matrix does not match its spectral decomposition");
    }
}

Observable Observable::from_matrix(const ComplexMatrix& hermitian) {
    if (hermitian.hermiticity_defect() > 1e-12) {
        throw std::invalid_argument("Observable::from_matrix: input not Hermitian");
    }
    EigenDecomposition dec = hermitian_eigendecompose(hermitian);
    const std::size_t n = hermitian.dim();

    double scale = 1.0;
    for (double ev : dec.eigenvalues) scale = std::max(scale, std::abs(ev));
    const double group_tol = 1e-8 * scale;

    std::vector<SpectralLine> lines;
    std::size_t k = 0;
    while (k < n) {
        std::size_t end = k + 1;
        while (end < n && dec.eigenvalues[k] - dec.eigenvalues[end] <= group_tol) ++end;
        ComplexMatrix proj(n);
        double mean = 0.0;
        for (std::size_t j = k; j < end; ++j) {
            proj += ComplexMatrix::projector(dec.eigenvector(j));
            mean += dec.eigenvalues[j];
        }
        mean /= static_cast<double>(end - k);
        lines.push_back({mean, std::move(proj)});
        k = end;
    }
    return Observable(hermitian, std::move(lines));
}

Observable Observable::from_spectrum(std::vector<SpectralLine> lines) {
    if (lines.empty()) throw std::invalid_argument("Observable::from_spectrum: no spectral lines");
    const std::size_t n = lines.front().projector.dim();
    ComplexMatrix m(n);
    for (const SpectralLine& line : lines) {
        if (line.projector.dim() != n) {
            throw std::invalid_argument("Observable::from_spectrum: projector dimension mismatch");
        }
        m += Complex(line.eigenvalue, 0.0) * line.projector;
    }
    return Observable(std::move(m), std::move(lines));
}

bool Observable::all_projectors_rank_one() const {
    for (const SpectralLine& line : spectrum_) {
        if (std::abs(std::real(line.projector.trace()) - 1.0) > 1e-8) return false;
    }
    return true;
}

bool Observable::is_involutory(double tol) const {
    return max_abs_diff(matrix_ * matrix_, ComplexMatrix::identity(dim())) <= tol;
}

}  // namespace abring
