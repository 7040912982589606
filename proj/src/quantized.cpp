#include "abring/quantized.hpp"

#include "abring/entropy.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace abring {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kNormTol = 1e-10;
constexpr double kInvSqrt2 = 0.70710678118654752440;
}  // namespace

CylinderState::CylinderState(int ell, std::vector<Complex> coeffs)
    : ell_(ell), coeffs_(std::move(coeffs)) {
    if (ell_ < 1) throw std::invalid_argument("CylinderState: ell must be positive");
    if (coeffs_.size() != static_cast<std::size_t>(2 * ell_ + 1)) {
        std::ostringstream msg;
        msg << "CylinderState: expected " << 2 * ell_ + 1 << " coefficients, got " << coeffs_.size();
        throw std::invalid_argument(msg.str());
    }
    double total = 0.0;
    for (const Complex& c : coeffs_) total += std::norm(c);
    if (std::abs(total - 1.0) > kNormTol) {
        std::ostringstream msg;
        msg << "CylinderState: populations sum to " << total << ", not 1 within " << kNormTol;
        throw std::invalid_argument(msg.str());
    }
}

CylinderState CylinderState::eigenstate(int ell, int m) {
    std::vector<Complex> c(2 * ell + 1);
    if (m < -ell || m > ell) throw std::invalid_argument("CylinderState::eigenstate: m outside cutoff");
    c[static_cast<std::size_t>(m + ell)] = 1.0;
    return CylinderState(ell, std::move(c));
}

CylinderState CylinderState::even_superposition(int ell, const std::vector<int>& ms) {
    if (ms.empty()) throw std::invalid_argument("CylinderState::even_superposition: empty index set");
    std::vector<Complex> c(2 * ell + 1);
    const double amp = 1.0 / std::sqrt(static_cast<double>(ms.size()));
    for (int m : ms) {
        if (m < -ell || m > ell) {
            std::ostringstream msg;
            msg << "CylinderState::even_superposition: m = " << m << " outside cutoff ell = " << ell;
            throw std::invalid_argument(msg.str());
        }
        const std::size_t idx = static_cast<std::size_t>(m + ell);
        if (c[idx] != Complex{}) {
            throw std::invalid_argument("CylinderState::even_superposition: repeated index");
        }
        c[idx] = amp;
    }
    return CylinderState(ell, std::move(c));
}

std::vector<double> CylinderState::populations() const {
    std::vector<double> p(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i] = std::norm(coeffs_[i]);
    return p;
}

double CylinderState::mean_m() const {
    double s = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        s += std::norm(coeffs_[i]) * static_cast<double>(m_of(i));
    }
    return s;
}

std::size_t CylinderState::index_of(int m) const {
    if (m < -ell_ || m > ell_) {
        std::ostringstream msg;
        msg << "CylinderState: m = " << m << " outside cutoff ell = " << ell_;
        throw std::invalid_argument(msg.str());
    }
    return static_cast<std::size_t>(m + ell_);
}

double QuantizedScenario::branch_phase(int m, double theta) const {
    return f(theta) + qk * static_cast<double>(m) * theta / kPi;
}

double QuantizedScenario::branch_global_phase(int m, double theta) const {
    return global_phase ? global_phase(m, theta) : 0.0;
}

Ket joint_ket(double theta, const QuantizedScenario& scenario) {
    require_theta(theta);
    const std::size_t dr = scenario.cylinder.dim();
    Ket psi(2 * dr);
    for (std::size_t i = 0; i < dr; ++i) {
        const int m = scenario.cylinder.m_of(i);
        const Complex amp = scenario.cylinder.coeffs()[i] *
                            std::polar(kInvSqrt2, scenario.branch_global_phase(m, theta));
        psi[i] = amp;                                                          // |0> branch
        psi[dr + i] = amp * std::polar(1.0, scenario.branch_phase(m, theta));  // |1> branch
    }
    return psi;
}

DensityMatrix joint_state(double theta, const QuantizedScenario& scenario) {
    return DensityMatrix::pure(joint_ket(theta, scenario), scenario.split());
}

namespace {

Complex coherent_sum(double theta, const QuantizedScenario& scenario) {
    Complex zeta = 0.0;
    for (std::size_t i = 0; i < scenario.cylinder.dim(); ++i) {
        const int m = scenario.cylinder.m_of(i);
        zeta += std::norm(scenario.cylinder.coeffs()[i]) *
                std::polar(1.0, scenario.branch_phase(m, theta));
    }
    return zeta;
}

}  // namespace

DensityMatrix reduced_charge_state(double theta, const QuantizedScenario& scenario) {
    require_theta(theta);
    const Complex zeta = coherent_sum(theta, scenario);
    ComplexMatrix m(2);
    m(0, 0) = 0.5;
    m(1, 1) = 0.5;
    m(0, 1) = 0.5 * std::conj(zeta);
    m(1, 0) = 0.5 * zeta;
    return DensityMatrix(std::move(m));
}

double lambda0(double theta, const QuantizedScenario& scenario) {
    require_theta(theta);
    return 0.5 * (1.0 - std::abs(coherent_sum(theta, scenario)));
}

double lambda_x(double theta, const QuantizedScenario& scenario) {
    require_theta(theta);
    return 0.5 * (1.0 - std::real(coherent_sum(theta, scenario)));
}

double lambda_y(double theta, const QuantizedScenario& scenario) {
    require_theta(theta);
    return 0.5 * (1.0 - std::imag(coherent_sum(theta, scenario)));
}

double realism_sigma_x_reduced(double theta, const QuantizedScenario& scenario) {
    return 1.0 + binary_entropy(lambda0(theta, scenario)) -
           binary_entropy(lambda_x(theta, scenario));
}

double realism_sigma_y_reduced(double theta, const QuantizedScenario& scenario) {
    return 1.0 + binary_entropy(lambda0(theta, scenario)) -
           binary_entropy(lambda_y(theta, scenario));
}

namespace {

double branch_operator_phase(double theta, int m, const QuantizedScenario& scenario, double delta,
                             double step) {
    return scenario.f(theta) + delta -
           scenario.qk * static_cast<double>(m) * (kPi * step - theta) / kPi;
}

Observable branch_operator(double theta, int m, const QuantizedScenario& scenario, double delta) {
    require_theta(theta);
    const double step = heaviside_post(theta - kPi / 2.0);
    const double phase = branch_operator_phase(theta, m, scenario, delta, step);
    const Complex e = std::polar(1.0, phase);
    const Ket plus{kInvSqrt2, e * kInvSqrt2};
    const Ket minus{kInvSqrt2, -e * kInvSqrt2};
    return Observable::from_spectrum({
        {+1.0, ComplexMatrix::projector(plus)},
        {-1.0, ComplexMatrix::projector(minus)},
    });
}

Observable joint_operator(double theta, const QuantizedScenario& scenario, double delta) {
    require_theta(theta);
    const std::size_t dr = scenario.cylinder.dim();
    const double step = heaviside_post(theta - kPi / 2.0);
    std::vector<SpectralLine> lines;
    lines.reserve(2 * dr);
    for (std::size_t i = 0; i < dr; ++i) {
        const int m = scenario.cylinder.m_of(i);
        const double phase = branch_operator_phase(theta, m, scenario, delta, step);
        const Complex e = std::polar(1.0, phase);
        Ket plus(2 * dr), minus(2 * dr);
        plus[i] = kInvSqrt2;
        plus[dr + i] = e * kInvSqrt2;
        minus[i] = kInvSqrt2;
        minus[dr + i] = -e * kInvSqrt2;
        lines.push_back({+1.0, ComplexMatrix::projector(plus)});
        lines.push_back({-1.0, ComplexMatrix::projector(minus)});
    }
    return Observable::from_spectrum(std::move(lines));
}

}  // namespace

Observable sigma_xA_branch(double theta, int m, const QuantizedScenario& scenario) {
    return branch_operator(theta, m, scenario, 0.0);
}

Observable sigma_yA_branch(double theta, int m, const QuantizedScenario& scenario) {
    return branch_operator(theta, m, scenario, kPi / 2.0);
}

Observable joint_sigma_x(double theta, const QuantizedScenario& scenario) {
    return joint_operator(theta, scenario, 0.0);
}

Observable joint_sigma_y(double theta, const QuantizedScenario& scenario) {
    return joint_operator(theta, scenario, kPi / 2.0);
}

double realism_joint_sigma_closed_form(double theta, const QuantizedScenario& scenario,
                                       JointAxis axis, CrossingSide side) {
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
    const double d = static_cast<double>(scenario.joint_dim());  // 4l + 2
    const double delta = axis == JointAxis::X ? 0.0 : kPi / 2.0;

    const std::vector<double> pops = scenario.cylinder.populations();
    double mixing = shannon_entropy(ProbVector(pops), d);
    double branch_term = 0.0;
    for (std::size_t i = 0; i < pops.size(); ++i) {
        const int m = scenario.cylinder.m_of(i);
        const double lambda =
            0.5 * (1.0 + std::cos(scenario.qk * static_cast<double>(m) * step - delta));
        branch_term += pops[i] * binary_entropy(lambda, d);
    }
    return 1.0 - mixing - branch_term;
}

double realism_sigma_z_joint(const QuantizedScenario& scenario, const MeasureContext& ctx) {
    if (!(ctx.base > 1.0)) throw std::invalid_argument("realism_sigma_z_joint: base must exceed 1");
    (void)scenario;
    return (std::log(static_cast<double>(ctx.normalization_dim)) - std::log(2.0)) /
           std::log(ctx.base);
}

double weak_interaction_residual(double theta, const QuantizedScenario& scenario) {
    require_theta(theta);
    const double u = (kPi * heaviside_post(theta - kPi / 2.0) - theta) / kPi;
    Complex exact = 0.0;
    for (std::size_t i = 0; i < scenario.cylinder.dim(); ++i) {
        const int m = scenario.cylinder.m_of(i);
        exact += std::norm(scenario.cylinder.coeffs()[i]) *
                 std::polar(1.0, scenario.qk * static_cast<double>(m) * u);
    }
    const Complex approx = std::polar(1.0, scenario.qk * scenario.cylinder.mean_m() * u);
    return std::abs(exact - approx);
}

}  // namespace abring
