#include "abring/verify.hpp"

#include "abring/classical.hpp"
#include "abring/entropy.hpp"
#include "abring/measures.hpp"
#include "abring/quantized.hpp"
#include "abring/random.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace abring {

namespace {

constexpr double kPi = std::numbers::pi;

struct Worst {
    double value = 0.0;
    void track(double v) {
        if (v > value) value = v;
    }
};

CheckResult check(std::string name, double tolerance, double worst, std::string note = "") {
    return {std::move(name), tolerance, worst, worst <= tolerance, std::move(note)};
}

MeasureContext qubit_ctx() { return {2.0, 2}; }

Observable observable_from_basis(const ComplexMatrix& unitary) {
    const std::size_t n = unitary.dim();
    std::vector<SpectralLine> lines;
    lines.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        Ket col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = unitary(i, k);
        lines.push_back({static_cast<double>(n - k), ComplexMatrix::projector(col)});
    }
    return Observable::from_spectrum(std::move(lines));
}

ComplexMatrix fourier_matrix(std::size_t n) {
    ComplexMatrix f(n);
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            f(j, k) = std::polar(norm, 2.0 * kPi * static_cast<double>(j * k) / static_cast<double>(n));
        }
    }
    return f;
}

// The four cylinder preparations used throughout: even superpositions with
// mean angular momentum 5/2 inside the ell = 6 cutoff.
std::vector<std::vector<int>> cylinder_index_sets() {
    return {{2, 3}, {1, 4}, {0, 5}, {-1, 6}};
}

QuantizedScenario make_quantized(const std::vector<int>& ms) {
    return {CylinderState::even_superposition(6, ms), 2.0 * kPi / 25.0, PhaseProfile::zero(), {}};
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_eigen(std::uint64_t seed) {
    Rng rng(seed);
    Worst recon, gram;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t dim = 1 + static_cast<std::size_t>(i % 26);
        const ComplexMatrix h = random_hermitian(rng, dim);
        const EigenDecomposition dec = hermitian_eigendecompose(h);
        ComplexMatrix rebuilt(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            rebuilt += Complex(dec.eigenvalues[k], 0.0) * ComplexMatrix::projector(dec.eigenvector(k));
        }
        recon.track(max_abs_diff(rebuilt, h));
        gram.track(max_abs_diff(dec.eigenvectors.adjoint() * dec.eigenvectors,
                                ComplexMatrix::identity(dim)));
    }
    return {
        check("eigen.reconstruction", 1e-10, recon.value, "1000 random Hermitian, dim 1..26"),
        check("eigen.orthonormality", 1e-10, gram.value, "eigenvector Gram matrix vs identity"),
    };
}

std::vector<CheckResult> suite_entropy(std::uint64_t seed) {
    Rng rng(seed);
    Worst base_change, rel_identity, clamping;
    const double bases[] = {std::numbers::e, 3.0, 10.0, 26.0};
    for (int i = 0; i < 40; ++i) {
        const std::size_t dr = 2 + static_cast<std::size_t>(i % 6);
        const BipartiteSplit split{2, dr};
        const DensityMatrix rho =
            (i % 3 == 0) ? random_pure(rng, split) : random_density(rng, split);

        const double s2 = von_neumann_entropy(rho, 2.0);
        for (double b : bases) {
            base_change.track(std::abs(von_neumann_entropy(rho, b) - s2 / std::log2(b)));
        }

        const Observable obs = random_rank1_observable(rng, 2);
        const DensityMatrix dephased = dephase(rho, obs, DephasingScope::SubsystemS);
        rel_identity.track(std::abs(relative_entropy(rho, dephased) -
                                    (von_neumann_entropy(dephased) - von_neumann_entropy(rho))));

        clamping.track(-dephased.spectrum().eigenvalues.back());
        clamping.track(-partial_trace(rho, Keep::S).spectrum().eigenvalues.back());
        clamping.track(-partial_trace(rho, Keep::R).spectrum().eigenvalues.back());
    }
    return {
        check("entropy.base_change", 1e-10, base_change.value, "S_b = S_2 / log2(b)"),
        check("entropy.relative_vs_dephased", 1e-9, rel_identity.value,
              "S(rho||Phi(rho)) = S(Phi(rho)) - S(rho)"),
        check("entropy.clamping", 1e-9, clamping.value,
              "dephased / reduced spectra stay above -1e-9"),
    };
}

std::vector<CheckResult> suite_minimizer(std::uint64_t seed) {
    Rng rng(seed);
    Worst identity_gap, violation;
    for (int i = 0; i < 100; ++i) {
        const std::size_t ds = 2 + static_cast<std::size_t>(i % 2);
        const std::size_t dr = 2 + static_cast<std::size_t>(i % 5);
        const BipartiteSplit split{ds, dr};
        const DensityMatrix rho =
            (i % 2 == 0) ? random_pure(rng, split) : random_density(rng, split);
        const Observable obs = random_rank1_observable(rng, ds);
        const MeasureContext ctx{2.0, ds};

        const DensityMatrix dephased = dephase(rho, obs, DephasingScope::SubsystemS);
        const double self = relative_entropy(rho, dephased);
        identity_gap.track(std::abs(self - irrealism(rho, obs, DephasingScope::SubsystemS, ctx)));

        for (int k = 0; k < 20; ++k) {
            const DensityMatrix candidate = random_density(rng, split);
            const double other =
                relative_entropy(rho, dephase(candidate, obs, DephasingScope::SubsystemS));
            violation.track(self - other);
        }
    }
    return {
        check("minimizer.self_is_minimum", 1e-9, violation.value,
              "S(rho||Phi(varrho)) >= S(rho||Phi(rho)) over 100x20 samples"),
        check("minimizer.identity", 1e-9, identity_gap.value,
              "min equals the dephasing entropy gap"),
    };
}

std::vector<CheckResult> suite_decomposition(std::uint64_t seed) {
    Rng rng(seed);
    Worst gap, monotonicity, product_discord;
    const MeasureContext ctx = qubit_ctx();
    for (int i = 0; i < 500; ++i) {
        const std::size_t dr = 2 + static_cast<std::size_t>(i % 12);
        const BipartiteSplit split{2, dr};
        const DensityMatrix rho =
            (i % 4 == 0) ? random_pure(rng, split) : random_density(rng, split);
        const Observable obs = random_rank1_observable(rng, 2);

        const double irr = irrealism(rho, obs, DephasingScope::SubsystemS, ctx);
        const double coh = coherence(partial_trace(rho, Keep::S), obs, ctx);
        const double dis = discord_nonminimized(rho, obs, ctx);
        gap.track(std::abs(irr - (coh + dis)));

        const DensityMatrix dephased = dephase(rho, obs, DephasingScope::SubsystemS);
        monotonicity.track(von_neumann_entropy(rho) - von_neumann_entropy(dephased));
    }
    for (int i = 0; i < 100; ++i) {
        const std::size_t dr = 2 + static_cast<std::size_t>(i % 6);
        const DensityMatrix rho_s = random_density(rng, 2);
        const DensityMatrix rho_r = random_density(rng, dr);
        const DensityMatrix product(tensor(rho_s.matrix(), rho_r.matrix()),
                                    BipartiteSplit{2, dr});
        const Observable obs = random_rank1_observable(rng, 2);
        product_discord.track(std::abs(discord_nonminimized(product, obs, ctx)));
    }
    return {
        check("decomposition.identity", 1e-9, gap.value,
              "irrealism = coherence + discord on 500 bipartite states"),
        check("decomposition.monotonicity", 1e-9, monotonicity.value,
              "S(Phi(rho)) >= S(rho)"),
        check("decomposition.product_discord", 1e-9, product_discord.value,
              "discord vanishes on product states"),
    };
}

std::vector<CheckResult> suite_bounds(std::uint64_t seed) {
    Rng rng(seed);
    Worst mub_bound, general_bound, looseness, pure_reduction, qubit_bound;
    for (int i = 0; i < 500; ++i) {
        const std::size_t ds = 2 + static_cast<std::size_t>(i % 4);
        const std::size_t dr = 2 + static_cast<std::size_t>((i / 4) % 4);
        const BipartiteSplit split{ds, dr};
        const bool pure = (i % 2 == 0);
        const DensityMatrix rho = pure ? random_pure(rng, split) : random_density(rng, split);
        const MeasureContext ctx{2.0, ds};

        const ComplexMatrix u = random_unitary(rng, ds);
        const Observable obs_a = observable_from_basis(u);
        const Observable obs_b = observable_from_basis(u * fourier_matrix(ds));
        const ComplementarityReport mub = complementarity_check(rho, obs_a, obs_b, ctx);
        if (!mub.mutually_unbiased || !mub.rhs_mub) {
            mub_bound.track(1.0);  // the constructed pair must be detected as MUB
        } else {
            mub_bound.track(mub.lhs - *mub.rhs_mub);
            looseness.track(*mub.rhs_mub - mub.rhs_general);
            if (pure) {
                const double ent = entanglement_entropy(rho, ctx);
                pure_reduction.track(std::abs(*mub.rhs_mub -
                                              (std::log2(static_cast<double>(ds)) - ent)));
            }
        }

        const Observable gen_a = random_rank1_observable(rng, ds);
        const Observable gen_b = random_rank1_observable(rng, ds);
        const ComplementarityReport gen = complementarity_check(rho, gen_a, gen_b, ctx);
        general_bound.track(gen.lhs - gen.rhs_general);
    }
    // Qubit complementarity: realism of sigma_z and sigma_g^A cannot sum past 1.
    for (int i = 0; i < 500; ++i) {
        const DensityMatrix rho = random_pure(rng, 2);
        const double theta = rng.uniform(0.0, kPi);
        ClassicalScenario sc{PhaseProfile::linear(rng.uniform(-1.0, 1.0)), rng.uniform(0.0, kPi),
                             random_gauge(rng, 2, 0.4)};
        const OperatorPhase g{sc.f, rng.uniform(0.0, kPi)};
        const ComplementarityReport rep =
            complementarity_check(rho, sigma_z(), sigma_gA(theta, g, sc), qubit_ctx());
        qubit_bound.track(rep.lhs - 1.0);
    }
    return {
        check("bounds.mub", 1e-9, mub_bound.value, "realism sum vs MUB bound, 500 states"),
        check("bounds.general", 1e-9, general_bound.value,
              "realism sum vs overlap bound, 500 states"),
        check("bounds.mub_tighter", 1e-9, looseness.value,
              "overlap bound never undercuts the MUB bound"),
        check("bounds.pure_reduction", 1e-10, pure_reduction.value,
              "pure states: MUB bound equals log d_S - entanglement entropy"),
        check("bounds.qubit_pair", 1e-9, qubit_bound.value,
              "realism(sigma_z) + realism(sigma_g^A) <= 1 on 500 pure qubits"),
    };
}

std::vector<CheckResult> suite_uncertainty(std::uint64_t seed) {
    Rng rng(seed);
    Worst identity, dephased_case;
    for (int i = 0; i < 300; ++i) {
        const DensityMatrix rho = (i % 2 == 0) ? random_pure(rng, 2) : random_density(rng, 2);
        const double theta = rng.uniform(0.0, kPi);
        ClassicalScenario sc{PhaseProfile::linear(rng.uniform(-1.0, 1.0)), rng.uniform(0.0, kPi), {}};
        const OperatorPhase g{PhaseProfile::zero(), rng.uniform(0.0, 2.0 * kPi)};
        const Observable obs =
            (i % 2 == 0) ? sigma_g(theta, g) : sigma_gA(theta, g, sc);
        const InvolutoryUncertainty u = involutory_uncertainty(rho, obs);
        identity.track(std::abs(u.uncertainty * u.uncertainty + u.expectation * u.expectation - 1.0));
    }
    for (int i = 0; i < 100; ++i) {
        // States invariant under sigma_z dephasing: diagonal qubits.
        const double p = rng.uniform(0.0, 1.0);
        ComplexMatrix m(2);
        m(0, 0) = p;
        m(1, 1) = 1.0 - p;
        const DensityMatrix rho(std::move(m));
        ClassicalScenario sc{PhaseProfile::linear(0.5), kPi / 5.0, {}};
        const OperatorPhase g{sc.f, rng.uniform(0.0, 2.0 * kPi)};
        const InvolutoryUncertainty u =
            involutory_uncertainty(rho, sigma_gA(rng.uniform(0.0, kPi), g, sc));
        dephased_case.track(std::abs(u.expectation));
        dephased_case.track(std::abs(u.uncertainty - 1.0));
    }
    return {
        check("uncertainty.involutory_identity", 1e-10, identity.value,
              "Delta^2 + <O>^2 = 1 on 300 qubit states"),
        check("uncertainty.z_dephased", 1e-12, dephased_case.value,
              "sigma_z-invariant states give <O> = 0, Delta = 1"),
    };
}

std::vector<CheckResult> suite_gauge(std::uint64_t seed) {
    Rng rng(seed);
    const std::vector<double> thetas = {0.4, 1.0, 1.5, 1.7, 2.3, 3.0};
    const ClassicalScenario baseline{PhaseProfile::linear(1.0 / 3.0), kPi / 5.0, {}};
    const std::vector<OperatorPhase> gs = {{baseline.f, 0.0}, {baseline.f, 0.7}};
    const MeasureContext ctx = qubit_ctx();

    std::vector<std::vector<double>> reference;  // per g, per theta
    for (const OperatorPhase& g : gs) {
        std::vector<double> row;
        for (double theta : thetas) {
            row.push_back(
                realism(charge_state(theta, baseline), sigma_gA(theta, g, baseline),
                        DephasingScope::Whole, ctx));
        }
        reference.push_back(std::move(row));
    }
    std::vector<double> plain_reference;
    const OperatorPhase g_plain{PhaseProfile::zero(), 0.0};
    for (double theta : thetas) {
        plain_reference.push_back(realism(charge_state(theta, baseline),
                                          sigma_g(theta, g_plain), DephasingScope::Whole, ctx));
    }

    Worst invariance;
    int insensitive = 0;
    for (int i = 0; i < 100; ++i) {
        ClassicalScenario sc = baseline;
        sc.gauge = random_gauge(rng, 3, 0.6);
        for (std::size_t gi = 0; gi < gs.size(); ++gi) {
            for (std::size_t ti = 0; ti < thetas.size(); ++ti) {
                const double value =
                    realism(charge_state(thetas[ti], sc), sigma_gA(thetas[ti], gs[gi], sc),
                            DephasingScope::Whole, ctx);
                invariance.track(std::abs(value - reference[gi][ti]));
            }
        }
        double plain_shift = 0.0;
        for (std::size_t ti = 0; ti < thetas.size(); ++ti) {
            const double value = realism(charge_state(thetas[ti], sc),
                                         sigma_g(thetas[ti], g_plain), DephasingScope::Whole, ctx);
            plain_shift = std::max(plain_shift, std::abs(value - plain_reference[ti]));
        }
        if (plain_shift <= 1e-3) ++insensitive;
    }
    std::ostringstream note;
    note << insensitive << " of 100 gauges left plain sigma_x realism within 1e-3";
    return {
        check("gauge.invariance", 1e-10, invariance.value,
              "realism of sigma_g^A across 100 random gauges"),
        check("gauge.sigma_x_sensitivity", 5.0, static_cast<double>(insensitive), note.str()),
    };
}

std::vector<CheckResult> suite_chord(std::uint64_t seed) {
    Rng rng(seed);
    const ClassicalScenario sc{PhaseProfile::zero(), kPi / 5.0, {}};

    Worst zero_gauge;
    std::vector<double> thetas;
    for (int k = 0; k < 48; ++k) {
        thetas.push_back(0.03 + (kPi - 0.06) * static_cast<double>(k) / 47.0);
    }
    thetas.push_back(kPi / 2.0 - 1.5e-3);
    thetas.push_back(kPi / 2.0 + 1.5e-3);
    for (double theta : thetas) {
        if (std::abs(theta - kPi / 2.0) < 1e-3) continue;
        zero_gauge.track(std::abs(chord_line_integral_numeric(theta, sc, 100000) -
                                  chord_line_integral(theta, sc)));
    }

    Worst gauged;
    for (int i = 0; i < 10; ++i) {
        ClassicalScenario gsc = sc;
        gsc.gauge = random_gauge(rng, 3, 0.6);
        for (double theta : {0.3, 0.9, 1.4, 1.8, 2.2, 2.8}) {
            gauged.track(std::abs(chord_line_integral_numeric(theta, gsc, 200000) -
                                  chord_line_integral(theta, gsc)));
        }
    }

    // Composite midpoint rule: doubling the point count divides the error ~4x.
    const double exact = chord_line_integral(kPi / 3.0, sc);
    const double e200 = std::abs(chord_line_integral_numeric(kPi / 3.0, sc, 200) - exact);
    const double e400 = std::abs(chord_line_integral_numeric(kPi / 3.0, sc, 400) - exact);
    const double e800 = std::abs(chord_line_integral_numeric(kPi / 3.0, sc, 800) - exact);
    const double min_ratio = std::min(e200 / e400, e400 / e800);
    std::ostringstream note;
    note << "error ratios " << e200 / e400 << ", " << e400 / e800;
    return {
        check("chord.quadrature_zero_gauge", 1e-8, zero_gauge.value,
              "n = 1e5 vs Heaviside closed form at 50 theta values"),
        check("chord.quadrature_gauged", 1e-6, gauged.value,
              "n = 2e5 with random gauge terms"),
        check("chord.convergence_order", 0.0, std::max(0.0, 2.5 - min_ratio), note.str()),
    };
}

std::vector<CheckResult> suite_jump(std::uint64_t seed) {
    (void)seed;
    const double phi = kPi / 5.0;
    const ClassicalScenario sc{PhaseProfile::linear(1.0 / 3.0), phi, {}};
    const MeasureContext ctx = qubit_ctx();
    const double eps = 1e-9;

    Worst sweep_vs_formula, antisymmetry, zero_flux;
    for (int k = 0; k <= 100; ++k) {
        const double delta = (kPi / 2.0) * static_cast<double>(k) / 100.0;
        const OperatorPhase g{sc.f, delta};
        const double pre = realism(charge_state(kPi / 2.0 - eps, sc),
                                   sigma_gA(kPi / 2.0 - eps, g, sc), DephasingScope::Whole, ctx);
        const double post = realism(charge_state(kPi / 2.0 + eps, sc),
                                    sigma_gA(kPi / 2.0 + eps, g, sc), DephasingScope::Whole, ctx);
        sweep_vs_formula.track(std::abs((post - pre) - realism_jump(delta, phi)));
        zero_flux.track(std::abs(realism_jump(delta, 0.0)));
    }
    for (int k = 0; k <= 50; ++k) {
        const double x = (phi / 2.0) * static_cast<double>(k) / 50.0;
        antisymmetry.track(
            std::abs(realism_jump(phi / 2.0 + x, phi) + realism_jump(phi / 2.0 - x, phi)));
    }
    const double at_half = std::abs(realism_jump(phi / 2.0, phi));
    return {
        check("jump.sweep_vs_closed_form", 1e-10, sweep_vs_formula.value,
              "one-sided dephasing evaluations vs jump formula over delta in [0, pi/2]"),
        check("jump.vanishing_point", 1e-12, at_half, "jump vanishes at delta = phi_AB/2"),
        check("jump.antisymmetry", 1e-12, antisymmetry.value,
              "antisymmetric about delta = phi_AB/2"),
        check("jump.zero_flux", 1e-15, zero_flux.value, "no flux, no jump"),
    };
}

std::vector<CheckResult> suite_oracle(std::uint64_t seed) {
    Rng rng(seed);
    const MeasureContext ctx = qubit_ctx();
    const std::vector<double> grid = make_theta_grid(0.0, kPi, 1000, 1e-9);

    const ClassicalScenario standard{PhaseProfile::linear(1.0 / 3.0), 0.0, {}};
    const ClassicalScenario flux{PhaseProfile::linear(1.0 / 3.0), kPi / 5.0, {}};
    ClassicalScenario gauged = flux;
    gauged.gauge = random_gauge(rng, 3, 0.5);

    Worst closed_vs_dephased, sigma_z_nullity, wave_constancy, flux_consistency;
    const std::vector<OperatorPhase> gs = {
        {flux.f, 0.0}, {flux.f, kPi / 2.0}, {flux.f, 0.7}, {PhaseProfile::zero(), 0.4}};

    for (double theta : grid) {
        for (const ClassicalScenario& sc : {standard, flux, gauged}) {
            const DensityMatrix rho = charge_state(theta, sc);
            for (const OperatorPhase& g : gs) {
                const double via_dephasing =
                    realism(rho, sigma_gA(theta, g, sc), DephasingScope::Whole, ctx);
                closed_vs_dephased.track(
                    std::abs(via_dephasing - realism_closed_form(theta, sc, g)));
            }
            sigma_z_nullity.track(std::abs(realism(rho, sigma_z(), DephasingScope::Whole, ctx)));
        }
        wave_constancy.track(std::abs(
            realism(charge_state(theta, standard), sigma_g(theta, {standard.f, 0.0}),
                    DephasingScope::Whole, ctx) -
            1.0));
    }

    // Piecewise constancy of the wave-operator family across each branch.
    Worst branch_constancy;
    for (const OperatorPhase& g : {OperatorPhase{flux.f, 0.0}, OperatorPhase{flux.f, 1.1}}) {
        double pre_min = 2.0, pre_max = -2.0, post_min = 2.0, post_max = -2.0;
        for (double theta : grid) {
            const double v =
                realism(charge_state(theta, flux), sigma_gA(theta, g, flux), DephasingScope::Whole, ctx);
            if (theta < kPi / 2.0) {
                pre_min = std::min(pre_min, v);
                pre_max = std::max(pre_max, v);
            } else {
                post_min = std::min(post_min, v);
                post_max = std::max(post_max, v);
            }
        }
        branch_constancy.track(pre_max - pre_min);
        branch_constancy.track(post_max - post_min);
    }

    for (int i = 0; i < 20; ++i) {
        ClassicalScenario sc = flux;
        sc.gauge = random_gauge(rng, 3, 0.7);
        for (double theta : grid) {
            const double encircled = arm_phase_w(theta, sc) + chord_line_integral(theta, sc);
            const double expected = sc.phi_ab * heaviside_post(theta - kPi / 2.0);
            flux_consistency.track(std::abs(encircled - expected));
        }
    }

    Worst pure_shortcut;
    for (int i = 0; i < 100; ++i) {
        const std::size_t ds = 2 + static_cast<std::size_t>(i % 3);
        const DensityMatrix rho = random_pure(rng, ds);
        const Observable obs = random_rank1_observable(rng, ds);
        const MeasureContext c{2.0, ds};
        const double shortcut = std::log2(static_cast<double>(ds)) -
                                von_neumann_entropy(dephase(rho, obs, DephasingScope::Whole));
        pure_shortcut.track(std::abs(realism(rho, obs, DephasingScope::Whole, c) - shortcut));
    }

    return {
        check("oracle.closed_form_vs_dephasing", 1e-10, closed_vs_dephased.value,
              "sigma_g^A realism, 1000-point grid, three scenarios"),
        check("oracle.sigma_z_nullity", 1e-12, sigma_z_nullity.value,
              "realism of sigma_z vanishes everywhere"),
        check("oracle.wave_operator_constancy", 1e-12, wave_constancy.value,
              "realism of sigma_f is 1 across the grid"),
        check("oracle.branch_constancy", 1e-12, branch_constancy.value,
              "wave-operator realism constant on each side of pi/2"),
        check("oracle.encircled_flux", 1e-12, flux_consistency.value,
              "w + chord = phi_AB * Theta for every gauge"),
        check("oracle.pure_state_shortcut", 1e-10, pure_shortcut.value,
              "pure states: realism = log d_S - S(Phi(rho))"),
    };
}

std::vector<CheckResult> suite_quantized(std::uint64_t seed) {
    Rng rng(seed);
    const std::vector<double> grid = make_theta_grid(0.0, kPi, 101, 1e-9);
    std::vector<QuantizedScenario> scenarios;
    for (const std::vector<int>& ms : cylinder_index_sets()) scenarios.push_back(make_quantized(ms));
    {
        // One generic preparation: random complex coefficients, nonzero f.
        Ket c = random_ket(rng, 13);
        scenarios.push_back(
            {CylinderState(6, std::move(c)), 2.0 * kPi / 25.0, PhaseProfile::linear(1.0 / 3.0), {}});
    }

    Worst reduction, identity_chain, decomposition, reduced_xy, joint_closed, z_joint, blocks;
    const MeasureContext ctx2 = qubit_ctx();

    for (const QuantizedScenario& sc : scenarios) {
        const std::size_t d = sc.joint_dim();
        const MeasureContext ctx_joint{static_cast<double>(d), d};
        for (double theta : grid) {
            const DensityMatrix joint = joint_state(theta, sc);
            const DensityMatrix reduced = partial_trace(joint, Keep::S);
            const DensityMatrix closed = reduced_charge_state(theta, sc);
            reduction.track(max_abs_diff(reduced.matrix(), closed.matrix()));

            const double h_lambda0 = binary_entropy(lambda0(theta, sc));
            const double realism_z_reduced =
                realism(reduced, sigma_z(), DephasingScope::Whole, ctx2);
            identity_chain.track(std::abs(realism_z_reduced - h_lambda0));
            identity_chain.track(std::abs(entanglement_entropy(joint, ctx2) - h_lambda0));

            const double irr = irrealism(joint, sigma_z(), DephasingScope::SubsystemS, ctx2);
            const double coh = coherence(reduced, sigma_z(), ctx2);
            const double dis = discord_nonminimized(joint, sigma_z(), ctx2);
            decomposition.track(std::abs(irr - (coh + dis)));

            reduced_xy.track(std::abs(realism_sigma_x_reduced(theta, sc) -
                                      realism(reduced, sigma_g(theta, {PhaseProfile::zero(), 0.0}),
                                              DephasingScope::Whole, ctx2)));
            reduced_xy.track(std::abs(
                realism_sigma_y_reduced(theta, sc) -
                realism(reduced, sigma_g(theta, {PhaseProfile::zero(), kPi / 2.0}),
                        DephasingScope::Whole, ctx2)));

            joint_closed.track(std::abs(
                realism_joint_sigma_closed_form(theta, sc, JointAxis::X) -
                realism(joint, joint_sigma_x(theta, sc), DephasingScope::Whole, ctx_joint)));
            joint_closed.track(std::abs(
                realism_joint_sigma_closed_form(theta, sc, JointAxis::Y) -
                realism(joint, joint_sigma_y(theta, sc), DephasingScope::Whole, ctx_joint)));

            z_joint.track(std::abs(realism_sigma_z_joint(sc, ctx_joint) -
                                   realism(joint, sigma_z(), DephasingScope::SubsystemS, ctx_joint)));
            z_joint.track(std::abs(realism_sigma_z_joint(sc, ctx2) -
                                   realism(joint, sigma_z(), DephasingScope::SubsystemS, ctx2)));
        }
    }

    // Dephased block structure at a handful of angles, built directly from
    // the per-branch decomposition on one side and the dephasing map on the
    // other.
    for (const QuantizedScenario& sc : {scenarios[0], scenarios[2]}) {
        const std::size_t dr = sc.cylinder.dim();
        for (double theta : {0.7, 2.0, 2.9}) {
            const DensityMatrix joint = joint_state(theta, sc);

            ComplexMatrix expected_x(2 * dr);
            const double step = heaviside_post(theta - kPi / 2.0);
            for (std::size_t i = 0; i < dr; ++i) {
                const int m = sc.cylinder.m_of(i);
                const double pop = std::norm(sc.cylinder.coeffs()[i]);
                if (pop == 0.0) continue;
                const double enc = sc.qk * static_cast<double>(m) * step;
                const double phase =
                    sc.f(theta) - sc.qk * static_cast<double>(m) * (kPi * step - theta) / kPi;
                const Complex e = std::polar(1.0, phase);
                Ket plus(2 * dr), minus(2 * dr);
                plus[i] = std::sqrt(0.5);
                plus[dr + i] = e * std::sqrt(0.5);
                minus[i] = std::sqrt(0.5);
                minus[dr + i] = -e * std::sqrt(0.5);
                ComplexMatrix block =
                    Complex(0.5 * (1.0 + std::cos(enc)), 0.0) * ComplexMatrix::projector(plus);
                block += Complex(0.5 * (1.0 - std::cos(enc)), 0.0) * ComplexMatrix::projector(minus);
                expected_x += Complex(pop, 0.0) * block;
            }
            blocks.track(max_abs_diff(
                dephase(joint, joint_sigma_x(theta, sc), DephasingScope::Whole).matrix(),
                expected_x));

            // sigma_z dephasing leaves the two flagged cylinder states.
            Ket xi_prime(dr), xi_second(dr);
            for (std::size_t i = 0; i < dr; ++i) {
                const int m = sc.cylinder.m_of(i);
                const Complex c =
                    sc.cylinder.coeffs()[i] * std::polar(1.0, sc.branch_global_phase(m, theta));
                xi_prime[i] = c;
                xi_second[i] = c * std::polar(1.0, sc.branch_phase(m, theta));
            }
            ComplexMatrix expected_z(2 * dr);
            const ComplexMatrix p0 = ComplexMatrix::projector(xi_prime);
            const ComplexMatrix p1 = ComplexMatrix::projector(xi_second);
            for (std::size_t k = 0; k < dr; ++k) {
                for (std::size_t l = 0; l < dr; ++l) {
                    expected_z(k, l) = 0.5 * p0(k, l);
                    expected_z(dr + k, dr + l) = 0.5 * p1(k, l);
                }
            }
            blocks.track(max_abs_diff(
                dephase(joint, sigma_z(), DephasingScope::SubsystemS).matrix(), expected_z));
        }
    }

    // Global phases g_m must not move any reported measure.
    Worst phase_invariance;
    {
        const QuantizedScenario base = scenarios[0];
        std::vector<double> a(base.cylinder.dim()), b(base.cylinder.dim());
        for (std::size_t i = 0; i < a.size(); ++i) {
            a[i] = rng.uniform(0.0, 2.0 * kPi);
            b[i] = rng.uniform(-1.0, 1.0);
        }
        QuantizedScenario shifted = base;
        const int ell = base.cylinder.ell();
        shifted.global_phase = [a, b, ell](int m, double theta) {
            const std::size_t idx = static_cast<std::size_t>(m + ell);
            return a[idx] + b[idx] * theta;
        };
        const std::size_t d = base.joint_dim();
        const MeasureContext ctx_joint{static_cast<double>(d), d};
        for (double theta : {0.5, 1.2, 1.9, 2.8}) {
            const DensityMatrix j0 = joint_state(theta, base);
            const DensityMatrix j1 = joint_state(theta, shifted);
            phase_invariance.track(std::abs(
                realism(j0, joint_sigma_x(theta, base), DephasingScope::Whole, ctx_joint) -
                realism(j1, joint_sigma_x(theta, shifted), DephasingScope::Whole, ctx_joint)));
            phase_invariance.track(std::abs(
                realism(j0, sigma_z(), DephasingScope::SubsystemS, ctx_joint) -
                realism(j1, sigma_z(), DephasingScope::SubsystemS, ctx_joint)));
            phase_invariance.track(
                std::abs(entanglement_entropy(j0, ctx2) - entanglement_entropy(j1, ctx2)));
        }
    }

    return {
        check("quantized.reduction", 1e-12, reduction.value,
              "partial trace matches the closed-form reduced state"),
        check("quantized.entanglement_identities", 1e-10, identity_chain.value,
              "realism(sigma_z | rho_S) = h(lambda0) = entanglement entropy"),
        check("quantized.decomposition", 1e-9, decomposition.value,
              "irrealism = coherence + discord on the joint state"),
        check("quantized.reduced_xy_closed_form", 1e-10, reduced_xy.value,
              "reduced sigma_x / sigma_y realism vs dephasing"),
        check("quantized.joint_closed_form", 1e-10, joint_closed.value,
              "joint operators: closed form vs dephasing, base 4l+2"),
        check("quantized.sigma_z_joint", 1e-10, z_joint.value,
              "sigma_z joint realism vs dephasing in both conventions"),
        check("quantized.dephased_blocks", 1e-10, blocks.value,
              "dephased states match their per-branch block forms"),
        check("quantized.global_phase_invariance", 1e-12, phase_invariance.value,
              "measures unchanged under per-branch global phases"),
    };
}

std::vector<CheckResult> suite_classical_limit(std::uint64_t seed) {
    (void)seed;
    const double qk = 2.0 * kPi / 25.0;
    const std::vector<double> grid = make_theta_grid(0.0, kPi, 101, 1e-9);
    const MeasureContext ctx = qubit_ctx();

    Worst agreement, separability;
    for (int m = -3; m <= 3; ++m) {
        const QuantizedScenario qsc{CylinderState::eigenstate(3, m), qk,
                                    PhaseProfile::linear(1.0 / 3.0), {}};
        const ClassicalScenario csc{qsc.f, qk * static_cast<double>(m), {}};
        for (double theta : grid) {
            separability.track(lambda0(theta, qsc));
            separability.track(weak_interaction_residual(theta, qsc));

            agreement.track(std::abs(
                realism_sigma_x_reduced(theta, qsc) -
                realism_closed_form_sigma_g(theta, csc, {PhaseProfile::zero(), 0.0})));
            agreement.track(std::abs(
                realism_sigma_y_reduced(theta, qsc) -
                realism_closed_form_sigma_g(theta, csc, {PhaseProfile::zero(), kPi / 2.0})));

            const DensityMatrix reduced = reduced_charge_state(theta, qsc);
            agreement.track(max_abs_diff(reduced.matrix(), charge_state(theta, csc).matrix()));
            agreement.track(std::abs(
                realism(reduced, sigma_xA_branch(theta, m, qsc), DephasingScope::Whole, ctx) -
                realism_closed_form(theta, csc, {csc.f, 0.0})));
            agreement.track(
                max_abs_diff(sigma_xA_branch(theta, m, qsc).matrix(),
                             sigma_gA(theta, {csc.f, 0.0}, csc).matrix()));
        }
    }
    return {
        check("classical_limit.agreement", 1e-10, agreement.value,
              "eigenstate cylinders reproduce the classical scenario, m in -3..3"),
        check("classical_limit.separability", 1e-12, separability.value,
              "lambda0 and the weak-interaction residual vanish"),
    };
}

std::vector<CheckResult> suite_weak(std::uint64_t seed) {
    (void)seed;
    Worst eigenstate_zero;
    for (int m = -2; m <= 2; ++m) {
        const QuantizedScenario sc{CylinderState::eigenstate(3, m), 1.3, PhaseProfile::zero(), {}};
        for (double theta : {0.4, 1.2, 2.0, 3.0}) {
            eigenstate_zero.track(weak_interaction_residual(theta, sc));
        }
    }

    // For a narrow superposition the residual scales as qk^2.
    const double theta = 2.0;
    const double qk = 0.2;
    const QuantizedScenario full{CylinderState::even_superposition(4, {2, 3}), qk,
                                 PhaseProfile::zero(), {}};
    const QuantizedScenario half{CylinderState::even_superposition(4, {2, 3}), qk / 2.0,
                                 PhaseProfile::zero(), {}};
    const double ratio =
        weak_interaction_residual(theta, full) / weak_interaction_residual(theta, half);

    const QuantizedScenario broad{
        CylinderState::even_superposition(6, {-6, -4, -2, 0, 2, 4, 6}), 3.0,
        PhaseProfile::zero(), {}};
    const double broad_residual = weak_interaction_residual(theta, broad);

    std::ostringstream note;
    note << "qk-halving ratio " << ratio << ", broad residual " << broad_residual;
    return {
        check("weak.eigenstate_zero", 1e-15, eigenstate_zero.value,
              "eigenstate cylinders have zero residual"),
        check("weak.quadratic_order", 0.0,
              std::max(0.0, 3.5 - ratio) + std::max(0.0, ratio - 4.5), note.str()),
        check("weak.broad_flagged", 0.0, broad_residual > 0.1 ? 0.0 : 1.0, note.str()),
    };
}

using SuiteFn = std::vector<CheckResult> (*)(std::uint64_t);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"eigen", suite_eigen},
        {"entropy", suite_entropy},
        {"minimizer", suite_minimizer},
        {"decomposition", suite_decomposition},
        {"bounds", suite_bounds},
        {"uncertainty", suite_uncertainty},
        {"gauge", suite_gauge},
        {"chord", suite_chord},
        {"jump", suite_jump},
        {"oracle", suite_oracle},
        {"quantized", suite_quantized},
        {"classical-limit", suite_classical_limit},
        {"weak", suite_weak},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suite_table()) out.push_back(name);
        return out;
    }();
    return names;
}

bool is_verify_suite(const std::string& name) {
    if (name == "all") return true;
    for (const auto& [suite, fn] : suite_table()) {
        if (suite == name) return true;
    }
    return false;
}

std::vector<CheckResult> run_verify_suite(const std::string& name, std::uint64_t seed) {
    if (name == "all") return run_all_verify_suites(seed);
    for (const auto& [suite, fn] : suite_table()) {
        if (suite == name) return fn(seed);
    }
    throw std::invalid_argument("unknown verification suite: " + name);
}

std::vector<CheckResult> run_all_verify_suites(std::uint64_t seed) {
    std::vector<CheckResult> all;
    for (const auto& [suite, fn] : suite_table()) {
        std::vector<CheckResult> results = fn(seed);
        all.insert(all.end(), results.begin(), results.end());
    }
    return all;
}

}  // namespace abring
