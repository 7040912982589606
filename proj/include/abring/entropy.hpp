#pragma once

#include "abring/density_matrix.hpp"

#include <vector>

namespace abring {

// Probability distribution: entries in [0,1] (inputs may stray by 1e-10 and
// are clamped), summing to 1 within 1e-10.
class ProbVector {
public:
    explicit ProbVector(std::vector<double> p);

    const std::vector<double>& values() const { return p_; }
    std::size_t size() const { return p_.size(); }

private:
    std::vector<double> p_;
};

// Shannon entropy -sum p log_base p, with 0 log 0 = 0.
double shannon_entropy(const ProbVector& p, double base = 2.0);

// h(lambda) = -lambda log2 lambda - (1-lambda) log2(1-lambda).
double binary_entropy(double lambda);
double binary_entropy(double lambda, double base);

// S(rho) = -tr(rho log rho), evaluated on the clamped spectrum. base > 1.
double von_neumann_entropy(const DensityMatrix& rho, double base = 2.0);

// S(rho||sigma) = tr[rho (log rho - log sigma)]. Returns +infinity when rho
// puts weight above 1e-10 on a sigma-eigenvector with eigenvalue below 1e-12.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, double base = 2.0);

}  // namespace abring
