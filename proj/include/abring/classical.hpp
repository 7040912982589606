#pragma once

#include "abring/density_matrix.hpp"
#include "abring/observable.hpp"

#include <array>
#include <vector>

namespace abring {

// Relative phase f(theta) accumulated between the two wave packets while they
// travel the arms (phase shifters, local potentials, ...). f(0) = 0 always.
class PhaseProfile {
public:
    enum class Kind { Zero, Linear, Tabulated };

    static PhaseProfile zero();
    static PhaseProfile linear(double slope);
    // Piecewise-linear profile on a strictly increasing theta grid in [0, pi]
    // starting at (0, 0); values beyond the last node are held constant.
    static PhaseProfile tabulated(std::vector<double> thetas, std::vector<double> values);

    double operator()(double theta) const;

    Kind kind() const { return kind_; }
    double slope() const { return slope_; }
    const std::vector<double>& grid() const { return thetas_; }
    const std::vector<double>& values() const { return values_; }

    friend bool operator==(const PhaseProfile&, const PhaseProfile&) = default;

private:
    Kind kind_ = Kind::Zero;
    double slope_ = 0.0;
    std::vector<double> thetas_;
    std::vector<double> values_;
};

// Single-valued scalar gauge function chi on the ring, as a trigonometric
// series chi(alpha) = sum_n a_n cos(n alpha) + b_n sin(n alpha) with n >= 1,
// measured in units of the solenoid flux. No winding term, so adding the
// gradient of chi to the vector potential shifts open-path line integrals by
// endpoint differences and leaves any encircled flux untouched.
class GaugeChoice {
public:
    GaugeChoice() = default;
    GaugeChoice(std::vector<double> fourier_cos, std::vector<double> fourier_sin);

    double chi(double alpha) const;
    double chi_prime(double alpha) const;
    bool is_zero() const { return cos_.empty() && sin_.empty(); }

    const std::vector<double>& fourier_cos() const { return cos_; }
    const std::vector<double>& fourier_sin() const { return sin_; }

    friend bool operator==(const GaugeChoice&, const GaugeChoice&) = default;

private:
    std::vector<double> cos_;
    std::vector<double> sin_;
};

// Two-arm ring interferometer with an optional classical flux line through
// the center. Geometry is fixed: unit ring, entry at angle -pi/2, packet 0
// (left arm) at -pi/2 - theta and packet 1 (right arm) at -pi/2 + theta,
// recombination at theta = pi. The flux enters only through the AB phase
// phi_ab = q Phi_B / hbar; the baseline vector potential is the symmetric
// form A = (Phi_B / 2 pi r) in the azimuthal direction, and every other
// gauge is reached by adding a GaugeChoice.
struct ClassicalScenario {
    PhaseProfile f = PhaseProfile::zero();
    double phi_ab = 0.0;
    GaugeChoice gauge;
};

double packet_angle_0(double theta);  // -pi/2 - theta
double packet_angle_1(double theta);  // -pi/2 + theta

// Heaviside step with the crossing convention Theta(0) = 1: the instant the
// chord passes through the flux counts as post-crossing.
double heaviside_post(double x);

// Checks theta in [0, pi]; throws std::out_of_range otherwise.
void require_theta(double theta);

// Arm-phase difference w(theta) = (q/hbar)(int_{gamma_1} A ds - int_{gamma_0} A ds),
// in radians. Baseline gives phi_ab * theta / pi; a gauge choice adds
// phi_ab * [chi(alpha_1) - chi(alpha_0)].
double arm_phase_w(double theta, const ClassicalScenario& scenario);

// (q/hbar) int over the straight chord from packet 1 to packet 0, in radians:
// phi_ab * (pi * Theta(theta - pi/2) - theta) / pi plus the gauge endpoint
// term phi_ab * [chi(alpha_0) - chi(alpha_1)].
double chord_line_integral(double theta, const ClassicalScenario& scenario);

// Independent midpoint-rule quadrature of the same chord integral, sampling
// the vector potential along the segment. Rejects |theta - pi/2| < 1e-6,
// where the chord passes through the flux line and the integrand blows up.
double chord_line_integral_numeric(double theta, const ClassicalScenario& scenario,
                                   std::size_t n_points);

// (|0> + e^{i[f(theta)+w(theta)]} |1>) / sqrt(2)
std::array<Complex, 2> charge_ket(double theta, const ClassicalScenario& scenario);
DensityMatrix charge_state(double theta, const ClassicalScenario& scenario);

// Operator phase g(theta) = profile(theta) + delta. The wave-operator family
// uses profile = f; plain sigma_x / sigma_y are delta = 0 / pi/2 on a zero
// profile.
struct OperatorPhase {
    PhaseProfile profile = PhaseProfile::zero();
    double delta = 0.0;

    double operator()(double theta) const { return profile(theta) + delta; }
};

Observable sigma_z();
// e^{-i g(theta)} |0><1| + e^{i g(theta)} |1><0|, built from its analytic
// eigenvectors (|0> +- e^{i g}|1>)/sqrt(2).
Observable sigma_g(double theta, const OperatorPhase& g);
// Same family with the chord line integral subtracted from the phase, making
// the realism gauge independent.
Observable sigma_gA(double theta, const OperatorPhase& g, const ClassicalScenario& scenario);

enum class CrossingSide {
    Auto,  // follow theta and the Theta(0) = 1 convention
    Pre,   // force the not-yet-crossed branch
    Post,  // force the crossed branch
};

// Closed-form realism of sigma_g^A: 1 - h(lambda only) with
// lambda = (1 + cos[f - g + phi_ab * Theta(theta - pi/2)]) / 2. The value is
// discontinuous at theta = pi/2; use the side flag for one-sided values.
double realism_closed_form(double theta, const ClassicalScenario& scenario, const OperatorPhase& g,
                           CrossingSide side = CrossingSide::Auto);

// Closed-form realism of plain sigma_g, which keeps the gauge-dependent w:
// lambda = (1 + cos[f + w - g]) / 2.
double realism_closed_form_sigma_g(double theta, const ClassicalScenario& scenario,
                                   const OperatorPhase& g);

// Size of the realism jump at theta = pi/2 for the wave-operator family
// g = f + delta: h((1+cos delta)/2) - h((1+cos(phi_ab - delta))/2).
double realism_jump(double delta, double phi_ab);

// Evenly spaced theta grid on [start, end]. Points inside the exclusion
// window around pi/2 are dropped and replaced by the pair of one-sided
// points pi/2 -+ exclusion_half_width, so sweeps never land on the jump.
std::vector<double> make_theta_grid(double start, double end, std::size_t count,
                                    double exclusion_half_width);

}  // namespace abring
