#include "abring/measures.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace abring {

namespace {

constexpr double kMubTol = 1e-8;

void require_context(const MeasureContext& ctx) {
    if (!(ctx.base > 1.0)) throw std::invalid_argument("MeasureContext: base must exceed 1");
    if (ctx.normalization_dim < 2) {
        throw std::invalid_argument("MeasureContext: normalization_dim must be at least 2");
    }
}

double log_in_base(double x, double base) { return std::log(x) / std::log(base); }

// rho_S when a split is present, otherwise the state itself (trivial R).
DensityMatrix system_part(const DensityMatrix& rho) {
    return rho.split() ? partial_trace(rho, Keep::S) : rho;
}

double nonneg(double x) { return (x < 0.0 && x > -1e-12) ? 0.0 : x; }

}  // namespace

DensityMatrix dephase(const DensityMatrix& rho, const Observable& obs, DephasingScope scope) {
    const std::size_t n = rho.dim();

    if (scope == DephasingScope::Whole || (!rho.split() && obs.dim() == n)) {
        if (obs.dim() != n) {
            std::ostringstream msg;
            msg << "dephase: observable dimension " << obs.dim() << " does not match state dimension "
                << n;
            throw std::invalid_argument(msg.str());
        }
        ComplexMatrix out(n);
        for (const SpectralLine& line : obs.spectrum()) {
            const ComplexMatrix& p = line.projector;
            if (std::abs(std::real(p.trace()) - 1.0) < 1e-9) {
                // Rank-one projector: P rho P = tr(P rho) P.
                Complex weight = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0; j < n; ++j) weight += p(i, j) * rho.matrix()(j, i);
                }
                out += Complex(std::real(weight), 0.0) * p;
            } else {
                out += p * rho.matrix() * p;
            }
        }
        return DensityMatrix(std::move(out), rho.split());
    }

    if (!rho.split()) {
        throw std::invalid_argument("dephase: subsystem scope requires a bipartite split");
    }
    const std::size_t ds = rho.split()->dim_s;
    const std::size_t dr = rho.split()->dim_r;
    if (obs.dim() != ds) {
        std::ostringstream msg;
        msg << "dephase: observable dimension " << obs.dim() << " does not match subsystem dimension "
            << ds;
        throw std::invalid_argument(msg.str());
    }
    const ComplexMatrix id_r = ComplexMatrix::identity(dr);
    ComplexMatrix out(n);
    for (const SpectralLine& line : obs.spectrum()) {
        const ComplexMatrix lifted = tensor(line.projector, id_r);
        out += lifted * rho.matrix() * lifted;
    }
    return DensityMatrix(std::move(out), rho.split());
}

double irrealism(const DensityMatrix& rho, const Observable& obs, DephasingScope scope,
                 const MeasureContext& ctx) {
    require_context(ctx);
    const DensityMatrix dephased = dephase(rho, obs, scope);
    return nonneg(von_neumann_entropy(dephased, ctx.base) - von_neumann_entropy(rho, ctx.base));
}

double realism(const DensityMatrix& rho, const Observable& obs, DephasingScope scope,
               const MeasureContext& ctx) {
    require_context(ctx);
    return log_in_base(static_cast<double>(ctx.normalization_dim), ctx.base) -
           irrealism(rho, obs, scope, ctx);
}

double coherence(const DensityMatrix& rho_s, const Observable& obs, const MeasureContext& ctx) {
    require_context(ctx);
    if (obs.dim() != rho_s.dim()) {
        throw std::invalid_argument("coherence: observable and state dimensions differ");
    }
    const DensityMatrix dephased = dephase(rho_s, obs, DephasingScope::Whole);
    return nonneg(von_neumann_entropy(dephased, ctx.base) - von_neumann_entropy(rho_s, ctx.base));
}

double discord_nonminimized(const DensityMatrix& rho, const Observable& obs,
                            const MeasureContext& ctx) {
    require_context(ctx);
    if (!rho.split()) {
        throw std::invalid_argument("discord_nonminimized: state carries no bipartite split");
    }
    const DensityMatrix dephased = dephase(rho, obs, DephasingScope::SubsystemS);
    return mutual_information(rho, ctx) - mutual_information(dephased, ctx);
}

double mutual_information(const DensityMatrix& rho, const MeasureContext& ctx) {
    require_context(ctx);
    if (!rho.split()) {
        throw std::invalid_argument("mutual_information: state carries no bipartite split");
    }
    const double s_s = von_neumann_entropy(partial_trace(rho, Keep::S), ctx.base);
    const double s_r = von_neumann_entropy(partial_trace(rho, Keep::R), ctx.base);
    const double s = von_neumann_entropy(rho, ctx.base);
    return nonneg(s_s + s_r - s);
}

double conditional_entropy(const DensityMatrix& rho, const MeasureContext& ctx) {
    require_context(ctx);
    if (!rho.split()) {
        throw std::invalid_argument("conditional_entropy: state carries no bipartite split");
    }
    return von_neumann_entropy(rho, ctx.base) -
           von_neumann_entropy(partial_trace(rho, Keep::R), ctx.base);
}

double entanglement_entropy(const DensityMatrix& rho, const MeasureContext& ctx) {
    require_context(ctx);
    if (!rho.split()) {
        throw std::invalid_argument("entanglement_entropy: state carries no bipartite split");
    }
    if (!rho.is_pure()) {
        std::ostringstream msg;
        msg << "entanglement_entropy: state is mixed (purity " << rho.purity() << ")";
        throw std::invalid_argument(msg.str());
    }
    return von_neumann_entropy(partial_trace(rho, Keep::S), ctx.base);
}

ComplementarityReport complementarity_check(const DensityMatrix& rho, const Observable& obs_a,
                                            const Observable& obs_b, const MeasureContext& ctx) {
    require_context(ctx);
    if (obs_a.dim() != obs_b.dim()) {
        throw std::invalid_argument("complementarity_check: observable dimensions differ");
    }
    const double ds = static_cast<double>(obs_a.dim());

    ComplementarityReport report;
    report.lhs = realism(rho, obs_a, DephasingScope::SubsystemS, ctx) +
                 realism(rho, obs_b, DephasingScope::SubsystemS, ctx);

    // Largest overlap between eigenprojectors; for rank-one pairs this is
    // |<o_j|o'_k>|^2, and the top eigenvalue of P A P generalizes it.
    bool mub = obs_a.all_projectors_rank_one() && obs_b.all_projectors_rank_one();
    double c = 0.0;
    for (const SpectralLine& la : obs_a.spectrum()) {
        for (const SpectralLine& lb : obs_b.spectrum()) {
            const ComplexMatrix pap = la.projector * lb.projector * la.projector;
            double overlap;
            if (mub) {
                overlap = std::real(pap.trace());
            } else {
                overlap = hermitian_eigendecompose(pap).eigenvalues.front();
            }
            c = std::max(c, overlap);
            if (std::abs(overlap - 1.0 / ds) > kMubTol) mub = false;
        }
    }
    report.overlap_c = c;
    report.mutually_unbiased = mub;

    const double s_rho = von_neumann_entropy(rho, ctx.base);
    const double s_s = von_neumann_entropy(system_part(rho), ctx.base);
    const double s_r =
        rho.split() ? von_neumann_entropy(partial_trace(rho, Keep::R), ctx.base) : 0.0;
    const double info = rho.split() ? mutual_information(rho, ctx) : 0.0;
    const double log_d = log_in_base(static_cast<double>(ctx.normalization_dim), ctx.base);

    if (mub) report.rhs_mub = log_d + s_s - info;
    report.rhs_general = 2.0 * log_d + log_in_base(c, ctx.base) + s_rho + s_r;
    return report;
}

InvolutoryUncertainty involutory_uncertainty(const DensityMatrix& rho, const Observable& obs) {
    if (obs.dim() != rho.dim()) {
        throw std::invalid_argument("involutory_uncertainty: dimension mismatch");
    }
    if (!obs.is_involutory()) {
        throw std::invalid_argument("involutory_uncertainty: observable does not square to identity");
    }
    const double expectation = std::real((rho.matrix() * obs.matrix()).trace());
    const double spread = 1.0 - expectation * expectation;
    return {expectation, std::sqrt(spread > 0.0 ? spread : 0.0)};
}

}  // namespace abring
