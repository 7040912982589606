#include "abring/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace abring {

namespace {

double offdiag_frobenius(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (i != j) s += std::norm(a(i, j));
        }
    }
    return std::sqrt(s);
}

}  // namespace

Ket EigenDecomposition::eigenvector(std::size_t k) const {
    Ket v(eigenvectors.dim());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = eigenvectors(i, k);
    return v;
}

EigenDecomposition hermitian_eigendecompose(const ComplexMatrix& m) {
    constexpr double kHermitianTol = 1e-12;
    constexpr double kConvergence = 1e-13;
    constexpr int kMaxSweeps = 100;

    const std::size_t n = m.dim();
    if (n == 0) throw std::invalid_argument("hermitian_eigendecompose: empty matrix");

    // Locate the worst Hermiticity violation so the diagnostic can name it.
    {
        double worst = 0.0;
        std::size_t wi = 0, wj = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                const double d = std::abs(m(i, j) - std::conj(m(j, i)));
                if (d > worst) {
                    worst = d;
                    wi = i;
                    wj = j;
                }
            }
        }
        if (worst > kHermitianTol) {
            std::ostringstream msg;
            msg << "hermitian_eigendecompose: input not Hermitian, |M(" << wi << "," << wj
                << ") - conj(M(" << wj << "," << wi << "))| = " << worst;
            throw std::invalid_argument(msg.str());
        }
    }

    ComplexMatrix a = m;
    // Symmetrize exactly so rounding in the input cannot bias the sweeps.
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = Complex(std::real(a(i, i)), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    int sweep = 0;
    double off = offdiag_frobenius(a);
    while (off >= kConvergence && sweep < kMaxSweeps) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r == 0.0) continue;

                // Phase the pivot to a real 2x2 block, then rotate it away.
                const Complex phase = apq / r;  // e^{i arg(apq)}
                const double app = std::real(a(p, p));
                const double aqq = std::real(a(q, q));
                const double tau = (aqq - app) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Column rotation J: J(p,p)=c, J(p,q)=s, J(q,p)=-s*conj(phase),
                // J(q,q)=c*conj(phase); apply A <- J^dagger A J, V <- V J.
                const Complex cph = std::conj(phase);
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex aip = a(i, p);
                    const Complex aiq = a(i, q);
                    a(i, p) = c * aip - s * cph * aiq;
                    a(i, q) = s * aip + c * cph * aiq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex apj = a(p, j);
                    const Complex aqj = a(q, j);
                    a(p, j) = c * apj - s * phase * aqj;
                    a(q, j) = s * apj + c * phase * aqj;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex vip = v(i, p);
                    const Complex viq = v(i, q);
                    v(i, p) = c * vip - s * cph * viq;
                    v(i, q) = s * vip + c * cph * viq;
                }
                // The pivot is annihilated up to roundoff; pin it to keep the
                // off-diagonal norm honest.
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = Complex(std::real(a(p, p)), 0.0);
                a(q, q) = Complex(std::real(a(q, q)), 0.0);
            }
        }
        ++sweep;
        off = offdiag_frobenius(a);
    }

    if (off >= kConvergence) {
        std::ostringstream msg;
        msg << "hermitian_eigendecompose: no convergence after " << kMaxSweeps
            << " sweeps, residual off-diagonal Frobenius norm " << off;
        throw std::runtime_error(msg.str());
    }

    EigenDecomposition dec;
    dec.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) dec.eigenvalues[i] = std::real(a(i, i));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return dec.eigenvalues[x] > dec.eigenvalues[y];
    });

    EigenDecomposition sorted;
    sorted.eigenvalues.resize(n);
    sorted.eigenvectors = ComplexMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        sorted.eigenvalues[k] = dec.eigenvalues[order[k]];
        for (std::size_t i = 0; i < n; ++i) sorted.eigenvectors(i, k) = v(i, order[k]);
    }
    return sorted;
}

}  // namespace abring
