#include "abring/entropy.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace abring {

namespace {

constexpr double kEntryTol = 1e-10;
constexpr double kSumTol = 1e-10;
constexpr double kSupportEigTol = 1e-12;
constexpr double kSupportWeightTol = 1e-10;

void require_base(double base) {
    if (!(base > 1.0)) {
        std::ostringstream msg;
        msg << "entropy: logarithm base " << base << " must exceed 1";
        throw std::invalid_argument(msg.str());
    }
}

// -sum p ln p with the 0 ln 0 = 0 convention, natural log.
double neg_p_ln_p_sum(const std::vector<double>& p) {
    double s = 0.0;
    for (double x : p) {
        if (x > 0.0) s -= x * std::log(x);
    }
    return s;
}

}  // namespace

ProbVector::ProbVector(std::vector<double> p) : p_(std::move(p)) {
    double sum = 0.0;
    for (double& x : p_) {
        if (x < -kEntryTol || x > 1.0 + kEntryTol) {
            std::ostringstream msg;
            msg << "ProbVector: entry " << x << " outside [0,1] beyond tolerance";
            throw std::invalid_argument(msg.str());
        }
        if (x < 0.0) x = 0.0;
        if (x > 1.0) x = 1.0;
        sum += x;
    }
    if (std::abs(sum - 1.0) > kSumTol) {
        std::ostringstream msg;
        msg << "ProbVector: entries sum to " << sum << ", not 1 within " << kSumTol;
        throw std::invalid_argument(msg.str());
    }
}

double shannon_entropy(const ProbVector& p, double base) {
    require_base(base);
    return neg_p_ln_p_sum(p.values()) / std::log(base);
}

double binary_entropy(double lambda) { return binary_entropy(lambda, 2.0); }

double binary_entropy(double lambda, double base) {
    require_base(base);
    if (lambda < -kEntryTol || lambda > 1.0 + kEntryTol) {
        std::ostringstream msg;
        msg << "binary_entropy: lambda " << lambda << " outside [0,1]";
        throw std::invalid_argument(msg.str());
    }
    if (lambda < 0.0) lambda = 0.0;
    if (lambda > 1.0) lambda = 1.0;
    double s = 0.0;
    if (lambda > 0.0) s -= lambda * std::log(lambda);
    if (lambda < 1.0) s -= (1.0 - lambda) * std::log(1.0 - lambda);
    return s / std::log(base);
}

double von_neumann_entropy(const DensityMatrix& rho, double base) {
    require_base(base);
    return neg_p_ln_p_sum(rho.clamped_eigenvalues()) / std::log(base);
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, double base) {
    require_base(base);
    if (rho.dim() != sigma.dim()) {
        throw std::invalid_argument("relative_entropy: dimension mismatch");
    }

    // tr(rho log sigma) = sum_j ln(s_j) <v_j|rho|v_j> over sigma's eigenpairs.
    const EigenDecomposition& sd = sigma.spectrum();
    double tr_rho_ln_sigma = 0.0;
    for (std::size_t j = 0; j < sd.eigenvalues.size(); ++j) {
        const Ket vj = sd.eigenvector(j);
        const double weight = std::real(inner(vj, rho.matrix().apply(vj)));
        double sj = sd.eigenvalues[j];
        if (sj < kSupportEigTol) {
            if (weight > kSupportWeightTol) {
                return std::numeric_limits<double>::infinity();
            }
            continue;
        }
        if (sj > 1.0) sj = 1.0;
        if (weight > 0.0) tr_rho_ln_sigma += weight * std::log(sj);
    }

    const double minus_s_rho = -neg_p_ln_p_sum(rho.clamped_eigenvalues());  // tr(rho ln rho)
    const double value = (minus_s_rho - tr_rho_ln_sigma) / std::log(base);
    // Clip the tiny negative dust that rounding can leave on S(rho||rho).
    return value < 0.0 && value > -1e-12 ? 0.0 : value;
}

}  // namespace abring
