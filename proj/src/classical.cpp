#include "abring/classical.hpp"

#include "abring/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace abring {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kThetaTol = 1e-12;
constexpr double kChordExclusion = 1e-6;
constexpr double kInvSqrt2 = 0.70710678118654752440;
}  // namespace

PhaseProfile PhaseProfile::zero() { return PhaseProfile(); }

PhaseProfile PhaseProfile::linear(double slope) {
    PhaseProfile p;
    p.kind_ = Kind::Linear;
    p.slope_ = slope;
    return p;
}

PhaseProfile PhaseProfile::tabulated(std::vector<double> thetas, std::vector<double> values) {
    if (thetas.size() != values.size() || thetas.size() < 2) {
        throw std::invalid_argument("PhaseProfile::tabulated: need matching grids of length >= 2");
    }
    if (std::abs(thetas.front()) > kThetaTol || std::abs(values.front()) > kThetaTol) {
        throw std::invalid_argument("PhaseProfile::tabulated: profile must start at f(0) = 0");
    }
    for (std::size_t i = 1; i < thetas.size(); ++i) {
        if (!(thetas[i] > thetas[i - 1])) {
            throw std::invalid_argument("PhaseProfile::tabulated: grid not strictly increasing");
        }
    }
    if (thetas.back() > kPi + kThetaTol) {
        throw std::invalid_argument("PhaseProfile::tabulated: grid extends beyond pi");
    }
    PhaseProfile p;
    p.kind_ = Kind::Tabulated;
    p.thetas_ = std::move(thetas);
    p.values_ = std::move(values);
    return p;
}

double PhaseProfile::operator()(double theta) const {
    switch (kind_) {
        case Kind::Zero:
            return 0.0;
        case Kind::Linear:
            return slope_ * theta;
        case Kind::Tabulated: {
            if (theta <= thetas_.front()) return values_.front();
            if (theta >= thetas_.back()) return values_.back();
            std::size_t hi = 1;
            while (thetas_[hi] < theta) ++hi;
            const double t = (theta - thetas_[hi - 1]) / (thetas_[hi] - thetas_[hi - 1]);
            return values_[hi - 1] + t * (values_[hi] - values_[hi - 1]);
        }
    }
    return 0.0;
}

GaugeChoice::GaugeChoice(std::vector<double> fourier_cos, std::vector<double> fourier_sin)
    : cos_(std::move(fourier_cos)), sin_(std::move(fourier_sin)) {}

double GaugeChoice::chi(double alpha) const {
    double s = 0.0;
    for (std::size_t i = 0; i < cos_.size(); ++i) s += cos_[i] * std::cos((i + 1) * alpha);
    for (std::size_t i = 0; i < sin_.size(); ++i) s += sin_[i] * std::sin((i + 1) * alpha);
    return s;
}

double GaugeChoice::chi_prime(double alpha) const {
    double s = 0.0;
    for (std::size_t i = 0; i < cos_.size(); ++i) {
        const double n = static_cast<double>(i + 1);
        s -= cos_[i] * n * std::sin(n * alpha);
    }
    for (std::size_t i = 0; i < sin_.size(); ++i) {
        const double n = static_cast<double>(i + 1);
        s += sin_[i] * n * std::cos(n * alpha);
    }
    return s;
}

double packet_angle_0(double theta) { return -kPi / 2.0 - theta; }
double packet_angle_1(double theta) { return -kPi / 2.0 + theta; }

double heaviside_post(double x) { return x >= 0.0 ? 1.0 : 0.0; }

void require_theta(double theta) {
    if (theta < -kThetaTol || theta > kPi + kThetaTol) {
        std::ostringstream msg;
        msg << "theta = " << theta << " outside [0, pi]";
        throw std::out_of_range(msg.str());
    }
}

double arm_phase_w(double theta, const ClassicalScenario& scenario) {
    require_theta(theta);
    const double gauge_term =
        scenario.gauge.chi(packet_angle_1(theta)) - scenario.gauge.chi(packet_angle_0(theta));
    return scenario.phi_ab * (theta / kPi + gauge_term);
}

double chord_line_integral(double theta, const ClassicalScenario& scenario) {
    require_theta(theta);
    const double gauge_term =
        scenario.gauge.chi(packet_angle_0(theta)) - scenario.gauge.chi(packet_angle_1(theta));
    return scenario.phi_ab *
           ((kPi * heaviside_post(theta - kPi / 2.0) - theta) / kPi + gauge_term);
}

double chord_line_integral_numeric(double theta, const ClassicalScenario& scenario,
                                   std::size_t n_points) {
    require_theta(theta);
    if (std::abs(theta - kPi / 2.0) < kChordExclusion) {
        std::ostringstream msg;
        msg << "chord_line_integral_numeric: theta = " << theta
            << " within " << kChordExclusion
            << " of pi/2, where the chord passes through the flux line";
        throw std::invalid_argument(msg.str());
    }
    if (n_points == 0) throw std::invalid_argument("chord_line_integral_numeric: n_points == 0");

    // Straight segment from packet 1 to packet 0; A = phi_ab [1/(2 pi) +
    // chi'(alpha)] / r in the azimuthal direction, so the integrand is
    // phi_ab [1/(2 pi) + chi'(alpha)] (x dy - y dx) / r^2.
    const double a1 = packet_angle_1(theta);
    const double a0 = packet_angle_0(theta);
    const double x1 = std::cos(a1), y1 = std::sin(a1);
    const double x0 = std::cos(a0), y0 = std::sin(a0);
    const double dx = x0 - x1, dy = y0 - y1;
    const double len = std::hypot(dx, dy);
    if (len < 1e-15) return 0.0;  // packets coincide at theta = 0 and pi

    // The integrand peaks where the chord comes closest to the flux line
    // (midpoint, by symmetry), with width ~ dist/len. A sinh-graded mesh in
    // that scale keeps the composite midpoint rule second order with an
    // error constant that does not blow up near the exclusion window.
    const double t_peak = 0.5;
    const double xm = x1 + t_peak * dx, ym = y1 + t_peak * dy;
    const double dist = std::hypot(xm, ym);
    const double scale = std::max(dist, 1e-12) / len;
    const double u_lo = std::asinh((0.0 - t_peak) / scale);
    const double u_hi = std::asinh((1.0 - t_peak) / scale);

    double sum = 0.0;
    const double h = (u_hi - u_lo) / static_cast<double>(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double u = u_lo + (static_cast<double>(i) + 0.5) * h;
        const double t = t_peak + scale * std::sinh(u);
        const double weight = scale * std::cosh(u);
        const double x = x1 + t * dx;
        const double y = y1 + t * dy;
        const double r2 = x * x + y * y;
        const double alpha = std::atan2(y, x);
        const double coeff = 1.0 / (2.0 * kPi) + scenario.gauge.chi_prime(alpha);
        sum += coeff * (x * dy - y * dx) / r2 * weight;
    }
    return scenario.phi_ab * sum * h;
}

std::vector<double> make_theta_grid(double start, double end, std::size_t count,
                                    double exclusion_half_width) {
    if (count < 2) throw std::invalid_argument("make_theta_grid: need at least 2 points");
    if (!(end > start)) throw std::invalid_argument("make_theta_grid: end must exceed start");
    require_theta(start);
    require_theta(end);

    const double half = kPi / 2.0;
    std::vector<double> grid;
    grid.reserve(count + 2);
    bool excluded = false;
    for (std::size_t k = 0; k < count; ++k) {
        const double theta =
            start + (end - start) * static_cast<double>(k) / static_cast<double>(count - 1);
        if (std::abs(theta - half) <= exclusion_half_width) {
            excluded = true;
            continue;
        }
        grid.push_back(theta);
    }
    if (excluded) {
        // The jump is reported through one-sided evaluations instead.
        const double pre = half - exclusion_half_width;
        const double post = half + exclusion_half_width;
        if (pre >= start && pre <= end) grid.push_back(pre);
        if (post >= start && post <= end) grid.push_back(post);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

std::array<Complex, 2> charge_ket(double theta, const ClassicalScenario& scenario) {
    require_theta(theta);
    const double phase = scenario.f(theta) + arm_phase_w(theta, scenario);
    return {Complex(kInvSqrt2, 0.0), std::polar(kInvSqrt2, phase)};
}

DensityMatrix charge_state(double theta, const ClassicalScenario& scenario) {
    const std::array<Complex, 2> k = charge_ket(theta, scenario);
    return DensityMatrix::pure(Ket{k[0], k[1]});
}

Observable sigma_z() {
    return Observable::from_spectrum({
        {+1.0, ComplexMatrix(2, {1.0, 0.0, 0.0, 0.0})},
        {-1.0, ComplexMatrix(2, {0.0, 0.0, 0.0, 1.0})},
    });
}

namespace {

// sigma with off-diagonal phase: eigenvectors (|0> +- e^{i phase}|1>)/sqrt(2).
Observable phase_operator(double phase) {
    const Complex e = std::polar(1.0, phase);
    const Ket plus{kInvSqrt2, e * kInvSqrt2};
    const Ket minus{kInvSqrt2, -e * kInvSqrt2};
    return Observable::from_spectrum({
        {+1.0, ComplexMatrix::projector(plus)},
        {-1.0, ComplexMatrix::projector(minus)},
    });
}

}  // namespace

Observable sigma_g(double theta, const OperatorPhase& g) {
    require_theta(theta);
    return phase_operator(g(theta));
}

Observable sigma_gA(double theta, const OperatorPhase& g, const ClassicalScenario& scenario) {
    require_theta(theta);
    return phase_operator(g(theta) - chord_line_integral(theta, scenario));
}

double realism_closed_form(double theta, const ClassicalScenario& scenario, const OperatorPhase& g,
                           CrossingSide side) {
    require_theta(theta);
    double step = 0.0;
    switch (side) {
        case CrossingSide::Auto:
            step = heaviside_post(theta - kPi / 2.0);
            break;
        case CrossingSide::Pre:
            step = 0.0;
            break;
        case CrossingSide::Post:
            step = 1.0;
            break;
    }
    const double lambda =
        0.5 * (1.0 + std::cos(scenario.f(theta) - g(theta) + scenario.phi_ab * step));
    return 1.0 - binary_entropy(lambda);
}

double realism_closed_form_sigma_g(double theta, const ClassicalScenario& scenario,
                                   const OperatorPhase& g) {
    require_theta(theta);
    const double lambda =
        0.5 * (1.0 + std::cos(scenario.f(theta) + arm_phase_w(theta, scenario) - g(theta)));
    return 1.0 - binary_entropy(lambda);
}

double realism_jump(double delta, double phi_ab) {
    return binary_entropy(0.5 * (1.0 + std::cos(delta))) -
           binary_entropy(0.5 * (1.0 + std::cos(phi_ab - delta)));
}

}  // namespace abring
