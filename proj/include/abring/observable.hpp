#pragma once

#include "abring/complex_matrix.hpp"

#include <vector>

namespace abring {

struct SpectralLine {
    double eigenvalue = 0.0;
    ComplexMatrix projector;
};

// A Hermitian operator together with the projector decomposition that defines
// its dephasing map. Two construction routes:
//
//  * from_matrix merges numerically degenerate eigenvalues into one projector
//    per eigenspace, which keeps the dephasing map basis independent under
//    degeneracy;
//  * from_spectrum takes explicit (eigenvalue, projector) pairs and allows
//    repeated eigenvalues with separate projectors, for operators whose
//    natural decomposition is finer than their eigenspaces (the per-branch
//    joint operators of the quantized-flux scenario).
//
// Invariants checked at construction: projectors idempotent, mutually
// orthogonal, summing to the identity within 1e-10, and the matrix equal to
// sum_j o_j P_j within 1e-10.
class Observable {
public:
    static Observable from_matrix(const ComplexMatrix& hermitian);
    static Observable from_spectrum(std::vector<SpectralLine> lines);

    const ComplexMatrix& matrix() const { return matrix_; }
    const std::vector<SpectralLine>& spectrum() const { return spectrum_; }
    std::size_t dim() const { return matrix_.dim(); }

    bool all_projectors_rank_one() const;
    bool is_involutory(double tol = 1e-10) const;

private:
    Observable(ComplexMatrix matrix, std::vector<SpectralLine> spectrum);

    ComplexMatrix matrix_;
    std::vector<SpectralLine> spectrum_;
};

}  // namespace abring
