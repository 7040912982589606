#pragma once

#include "abring/classical.hpp"
#include "abring/density_matrix.hpp"
#include "abring/measures.hpp"
#include "abring/observable.hpp"

#include <functional>
#include <vector>

namespace abring {

// Angular-momentum state of the flux-carrying cylinder: amplitudes c_m over
// m in {-ell, ..., ell}, normalized to 1 within 1e-10.
class CylinderState {
public:
    CylinderState(int ell, std::vector<Complex> coeffs);

    static CylinderState eigenstate(int ell, int m);
    // Equal-amplitude superposition of the listed m values.
    static CylinderState even_superposition(int ell, const std::vector<int>& ms);

    int ell() const { return ell_; }
    std::size_t dim() const { return coeffs_.size(); }  // 2 ell + 1
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    Complex coeff(int m) const { return coeffs_[index_of(m)]; }
    double population(int m) const { return std::norm(coeff(m)); }
    std::vector<double> populations() const;
    double mean_m() const;  // <L_z> / hbar

    std::size_t index_of(int m) const;
    int m_of(std::size_t index) const { return static_cast<int>(index) - ell_; }

private:
    int ell_;
    std::vector<Complex> coeffs_;
};

// Charge coupled to the quantized flux source. qk is the AB phase picked up
// per unit of cylinder angular momentum (the product qK with hbar absorbed),
// so branch m behaves like a classical scenario with phi_ab = qk * m. The
// per-branch global phases g_m(theta) default to zero; every measure below is
// invariant under them, and keeping them configurable makes that testable.
struct QuantizedScenario {
    CylinderState cylinder;
    double qk = 0.0;
    PhaseProfile f = PhaseProfile::zero();
    std::function<double(int, double)> global_phase;  // g_m(theta); null means 0

    std::size_t joint_dim() const { return 2 * cylinder.dim(); }
    BipartiteSplit split() const { return {2, cylinder.dim()}; }

    double branch_phase(int m, double theta) const;  // f(theta) + qk m theta / pi
    double branch_global_phase(int m, double theta) const;
};

// sum_m (c_m e^{i g_m} / sqrt 2)(|0> + e^{i branch_phase}|1>) (x) |m>
Ket joint_ket(double theta, const QuantizedScenario& scenario);
DensityMatrix joint_state(double theta, const QuantizedScenario& scenario);

// Closed-form reduced state of the charge: 1/2 on the diagonal and the
// population-weighted coherent sum zeta = sum_m |c_m|^2 e^{i branch_phase}
// in the off-diagonal.
DensityMatrix reduced_charge_state(double theta, const QuantizedScenario& scenario);

double lambda0(double theta, const QuantizedScenario& scenario);    // (1 - |zeta|) / 2
double lambda_x(double theta, const QuantizedScenario& scenario);   // (1 - Re zeta) / 2
double lambda_y(double theta, const QuantizedScenario& scenario);   // (1 - Im zeta) / 2

// Base-2 realism of sigma_x / sigma_y on the reduced charge state:
// 1 + h(lambda0) - h(lambda).
double realism_sigma_x_reduced(double theta, const QuantizedScenario& scenario);
double realism_sigma_y_reduced(double theta, const QuantizedScenario& scenario);

// Flux-conditioned branch operator on the charge: the sigma_g^A analog seen
// by cylinder branch m, with phase f(theta) - qk m (pi Theta(theta-pi/2) - theta)/pi.
Observable sigma_xA_branch(double theta, int m, const QuantizedScenario& scenario);
Observable sigma_yA_branch(double theta, int m, const QuantizedScenario& scenario);

// Joint operators sum_m sigma^{A_m} (x) |m><m|. The spectrum keeps one
// rank-one projector per branch and sign even though the eigenvalues +-1
// repeat across branches; the dephasing map of these operators is defined by
// exactly that refinement.
Observable joint_sigma_x(double theta, const QuantizedScenario& scenario);
Observable joint_sigma_y(double theta, const QuantizedScenario& scenario);

enum class JointAxis { X, Y };

// Closed-form realism of the joint operators in base 4l+2 with normalization
// dim 4l+2: 1 - h(C) - sum_m |c_m|^2 h(lambda_m) with lambda_m built from the
// encircled flux of branch m (zero before the crossing, qk*m after).
double realism_joint_sigma_closed_form(double theta, const QuantizedScenario& scenario,
                                       JointAxis axis, CrossingSide side = CrossingSide::Auto);

// Realism of sigma_z (x) 1 on the joint state: log(normalization_dim) - log 2
// in the context's base, independent of theta and of the global phases.
double realism_sigma_z_joint(const QuantizedScenario& scenario, const MeasureContext& ctx);

// Modulus of the gap in the weak-interaction approximation
// sum_m |c_m|^2 e^{i qk m u} ~ e^{i qk <m> u} with u = (pi Theta - theta)/pi.
// Zero for eigenstate cylinders; O(qk^2) for narrow superpositions.
double weak_interaction_residual(double theta, const QuantizedScenario& scenario);

}  // namespace abring
