#pragma once

#include "abring/complex_matrix.hpp"
#include "abring/eigen.hpp"

#include <optional>

namespace abring {

struct BipartiteSplit {
    std::size_t dim_s = 0;
    std::size_t dim_r = 0;

    friend bool operator==(const BipartiteSplit&, const BipartiteSplit&) = default;
};

// A validated quantum state: Hermitian within 1e-12, unit trace within 1e-12,
// eigenvalues >= -1e-9. The spectrum is computed once at construction and
// cached; everything downstream (entropies, purity checks) reads it from here.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix matrix, std::optional<BipartiteSplit> split = std::nullopt);

    static DensityMatrix pure(const Ket& ket, std::optional<BipartiteSplit> split = std::nullopt);

    const ComplexMatrix& matrix() const { return matrix_; }
    std::size_t dim() const { return matrix_.dim(); }
    const std::optional<BipartiteSplit>& split() const { return split_; }

    const EigenDecomposition& spectrum() const { return spectrum_; }
    // Eigenvalues clamped to [0, 1]: values in [-1e-9, 0) go to 0 and values
    // in (1, 1+1e-9] go to 1 before any entropy sees them.
    std::vector<double> clamped_eigenvalues() const;

    double purity() const;  // tr(rho^2), from the cached spectrum
    bool is_pure(double tol = 1e-10) const { return std::abs(purity() - 1.0) <= tol; }

    DensityMatrix with_split(BipartiteSplit split) const;

private:
    ComplexMatrix matrix_;
    std::optional<BipartiteSplit> split_;
    EigenDecomposition spectrum_;
};

enum class Keep { S, R };

// tr_R(rho) for Keep::S, tr_S(rho) for Keep::R. Requires a bipartite split.
DensityMatrix partial_trace(const DensityMatrix& rho, Keep keep);

}  // namespace abring
