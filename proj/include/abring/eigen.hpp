#pragma once

#include "abring/complex_matrix.hpp"

#include <vector>

namespace abring {

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // sorted descending
    ComplexMatrix eigenvectors;       // orthonormal columns, matching order

    Ket eigenvector(std::size_t k) const;
};

// Full eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations
// adapted to complex entries: each pivot is phased to a real 2x2 problem and
// annihilated by a plane rotation. Converges when the off-diagonal Frobenius
// norm drops below 1e-13, capped at 100 sweeps. The dimensions in this
// library never exceed a few dozen, where Jacobi is both robust and accurate.
//
// Throws std::invalid_argument if the input is not Hermitian within 1e-12
// (the message names the worst entry pair), and std::runtime_error with the
// residual off-diagonal norm if the sweep cap is hit.
EigenDecomposition hermitian_eigendecompose(const ComplexMatrix& m);

}  // namespace abring
