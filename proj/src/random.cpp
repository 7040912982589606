#include "abring/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace abring {

double Rng::uniform() {
    // 53 random mantissa bits -> [0, 1).
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::size_t Rng::uniform_index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("Rng::uniform_index: empty range");
    return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
}

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller on the portable uniform stream.
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

Complex Rng::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
}

Ket random_ket(Rng& rng, std::size_t dim) {
    Ket v(dim);
    for (Complex& z : v) z = rng.complex_gaussian();
    return normalized(std::move(v));
}

ComplexMatrix random_hermitian(Rng& rng, std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = rng.gaussian();
        for (std::size_t j = i + 1; j < dim; ++j) {
            const Complex z = rng.complex_gaussian();
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return m;
}

ComplexMatrix random_unitary(Rng& rng, std::size_t dim) {
    // Columns of a Gaussian matrix, orthonormalized twice for stability.
    std::vector<Ket> cols(dim);
    for (Ket& c : cols) {
        c.resize(dim);
        for (Complex& z : c) z = rng.complex_gaussian();
    }
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < dim; ++k) {
            for (std::size_t j = 0; j < k; ++j) {
                const Complex proj = inner(cols[j], cols[k]);
                for (std::size_t i = 0; i < dim; ++i) cols[k][i] -= proj * cols[j][i];
            }
            cols[k] = normalized(std::move(cols[k]));
        }
    }
    ComplexMatrix u(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t i = 0; i < dim; ++i) u(i, k) = cols[k][i];
    }
    return u;
}

DensityMatrix random_density(Rng& rng, std::size_t dim) {
    ComplexMatrix g(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.complex_gaussian();
    }
    ComplexMatrix w = g * g.adjoint();
    const double tr = std::real(w.trace());
    w *= Complex(1.0 / tr, 0.0);
    // Symmetrize away the last bits of rounding.
    ComplexMatrix h = w;
    for (std::size_t i = 0; i < dim; ++i) {
        h(i, i) = Complex(std::real(w(i, i)), 0.0);
        for (std::size_t j = i + 1; j < dim; ++j) {
            const Complex avg = 0.5 * (w(i, j) + std::conj(w(j, i)));
            h(i, j) = avg;
            h(j, i) = std::conj(avg);
        }
    }
    return DensityMatrix(std::move(h));
}

DensityMatrix random_density(Rng& rng, BipartiteSplit split) {
    return random_density(rng, split.dim_s * split.dim_r).with_split(split);
}

DensityMatrix random_pure(Rng& rng, std::size_t dim) {
    return DensityMatrix::pure(random_ket(rng, dim));
}

DensityMatrix random_pure(Rng& rng, BipartiteSplit split) {
    return DensityMatrix::pure(random_ket(rng, split.dim_s * split.dim_r), split);
}

Observable random_rank1_observable(Rng& rng, std::size_t dim) {
    const ComplexMatrix u = random_unitary(rng, dim);
    std::vector<SpectralLine> lines;
    lines.reserve(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        Ket col(dim);
        for (std::size_t i = 0; i < dim; ++i) col[i] = u(i, k);
        // Well-separated eigenvalues so the spectrum is unambiguous.
        lines.push_back({static_cast<double>(dim - k), ComplexMatrix::projector(col)});
    }
    return Observable::from_spectrum(std::move(lines));
}

GaugeChoice random_gauge(Rng& rng, std::size_t n_terms, double amplitude) {
    std::vector<double> c(n_terms), s(n_terms);
    for (std::size_t i = 0; i < n_terms; ++i) {
        c[i] = rng.uniform(-amplitude, amplitude);
        s[i] = rng.uniform(-amplitude, amplitude);
    }
    return GaugeChoice(std::move(c), std::move(s));
}

}  // namespace abring
