#pragma once

#include "abring/classical.hpp"
#include "abring/density_matrix.hpp"
#include "abring/observable.hpp"

#include <cstdint>
#include <random>

namespace abring {

// Seeded generator with hand-rolled uniform/gaussian draws so that a given
// seed produces the same stream on every platform (the standard library's
// distributions are implementation defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform();  // [0, 1)
    double uniform(double lo, double hi);
    std::size_t uniform_index(std::size_t n);  // [0, n)
    double gaussian();
    Complex complex_gaussian();

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

Ket random_ket(Rng& rng, std::size_t dim);
ComplexMatrix random_hermitian(Rng& rng, std::size_t dim);
// Gram-Schmidt orthonormalization of a Gaussian matrix.
ComplexMatrix random_unitary(Rng& rng, std::size_t dim);
// Full-rank rho = G G^dagger / tr(G G^dagger).
DensityMatrix random_density(Rng& rng, std::size_t dim);
DensityMatrix random_density(Rng& rng, BipartiteSplit split);
DensityMatrix random_pure(Rng& rng, std::size_t dim);
DensityMatrix random_pure(Rng& rng, BipartiteSplit split);
// Nondegenerate observable whose eigenbasis is Haar-ish random.
Observable random_rank1_observable(Rng& rng, std::size_t dim);
GaugeChoice random_gauge(Rng& rng, std::size_t n_terms, double amplitude);

}  // namespace abring
