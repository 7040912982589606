#pragma once

#include "abring/density_matrix.hpp"
#include "abring/entropy.hpp"
#include "abring/observable.hpp"

#include <optional>

namespace abring {

// Logarithm base and normalization dimension for the entropic measures.
// Realism is log_base(normalization_dim) minus the irrealism; the two-level
// sections use (2, 2) while the joint charge-cylinder analysis uses
// (4l+2, 4l+2). Keeping both explicit avoids baking in either convention.
struct MeasureContext {
    double base = 2.0;
    std::size_t normalization_dim = 2;
};

enum class DephasingScope {
    SubsystemS,  // projectors act as P_j (x) 1_R
    Whole,       // projectors act on the full state
};

// Non-selective projective measurement map: sum_j P_j rho P_j.
DensityMatrix dephase(const DensityMatrix& rho, const Observable& obs, DephasingScope scope);

// Irrealism S(Phi_O(rho)) - S(rho), the entropy generated by dephasing; also
// the relative entropy from rho to its dephased image.
double irrealism(const DensityMatrix& rho, const Observable& obs, DephasingScope scope,
                 const MeasureContext& ctx);

// Realism log(normalization_dim) - irrealism.
double realism(const DensityMatrix& rho, const Observable& obs, DephasingScope scope,
               const MeasureContext& ctx);

// Coherence of a (reduced) state in the observable's eigenbasis: the
// irrealism of rho_s taken on its own.
double coherence(const DensityMatrix& rho_s, const Observable& obs, const MeasureContext& ctx);

// Non-minimized discord: drop in mutual information under dephasing of S.
double discord_nonminimized(const DensityMatrix& rho, const Observable& obs,
                            const MeasureContext& ctx);

double mutual_information(const DensityMatrix& rho, const MeasureContext& ctx);

// S(rho) - S(rho_R).
double conditional_entropy(const DensityMatrix& rho, const MeasureContext& ctx);

// S(rho_S) for a pure bipartite state; rejects mixed input.
double entanglement_entropy(const DensityMatrix& rho, const MeasureContext& ctx);

struct ComplementarityReport {
    double lhs = 0.0;                // realism(O) + realism(O')
    std::optional<double> rhs_mub;   // log d_S + S(rho_S) - I_{S:R}, when O,O' are MUB
    double rhs_general = 0.0;        // log(d_S^2 c) + S(rho) + S(rho_R)
    double overlap_c = 0.0;          // max_jk of the projector-pair overlap
    bool mutually_unbiased = false;
};

// Evaluates both complementarity bounds for a pair of observables on S.
// The MUB bound is reported only when every squared eigenvector overlap
// equals 1/d_S within 1e-8 (which requires rank-one projectors).
ComplementarityReport complementarity_check(const DensityMatrix& rho, const Observable& obs_a,
                                            const Observable& obs_b, const MeasureContext& ctx);

struct InvolutoryUncertainty {
    double expectation = 0.0;
    double uncertainty = 0.0;  // sqrt(1 - <O>^2)
};

// Uncertainty of an involutory observable (O^2 = 1). Rejects other inputs.
InvolutoryUncertainty involutory_uncertainty(const DensityMatrix& rho, const Observable& obs);

}  // namespace abring
