#ifndef PDC_DYNAMICS_HPP
#define PDC_DYNAMICS_HPP

#include <cstddef>
#include <vector>

#include "pdc/moments.hpp"

namespace pdc {

// Lossless cavity: everything enters through the dimensionless interaction
// parameter r and the input occupation n0.
struct SteadyParams {
  double r = 0.0;
  double n0 = 0.0;
  StatKind stat = StatKind::Quantum;
};

// Throws std::domain_error unless r >= 0, n0 >= 0 and both are finite.
void validate_params(const SteadyParams& p);

// Applies the four-mode Bogoliubov map (h <-> v' pair squeezing across the
// two arms) to the thermal input state, as an 8x8 symplectic conjugation of
// the full second-moment matrix. The closed-form occupation
// n(r) = sinh^2 r + n0 (1 + 2 sinh^2 r) (quantum; drop the spontaneous
// sinh^2 r term for classical) and pairing A = (n0 + 1/2) sinh 2r
// (resp. n0 sinh 2r) are deliberately *not* pasted in here so they remain
// independent cross-checks.
GaussianMoments evolve_lossless(const SteadyParams& p);

// Lossy cavity with exponentially decaying coupling kappa(t) = kappa0
// e^{-Lambda t}, equal loss rate lambda on all four modes, thermal bath
// occupation n0.
struct LossyParams {
  double kappa0 = 1.0;
  double Lambda = 0.1;
  double lambda = 0.1;
  double n0 = 0.0;
  double t_max = 10.0;
  double dt = 1e-3;
  StatKind stat = StatKind::Quantum;
};

// Throws std::domain_error unless all rates and n0 are >= 0 and finite,
// t_max > 0 and 0 < dt <= t_max.
void validate_params(const LossyParams& p);

// Accumulated squeezing Delta(t, t') = integral of kappa over [t', t]:
// (kappa0/Lambda)(e^{-Lambda t'} - e^{-Lambda t}), with the Lambda = 0
// constant-coupling branch kappa0 (t - t') taken explicitly. t = +infinity
// is allowed (gives kappa0/Lambda e^{-Lambda t'}). Throws std::domain_error
// if t' < 0 or t' > t.
double delta_kernel(const LossyParams& p, double t, double t_prime);

// Trajectory of second moments on the uniform grid t_k = k dt. The state
// stays of the paired form (all occupations equal, the two anomalous
// channels opposite), so only the scalar pair (n, A) is stored per point;
// moments_at materializes the full GaussianMoments on demand.
struct MomentTrajectory {
  StatKind stat = StatKind::Quantum;
  std::vector<double> time;
  std::vector<double> occupation;  // n(t_k), per mode
  std::vector<double> pairing;     // A(t_k), the (Ah,Bv) channel

  std::size_t size() const { return time.size(); }
  GaussianMoments moments_at(std::size_t k) const;
};

// Integrates the moment equations implied by the linear Langevin dynamics,
//   dn/dt = -2 lambda n + 2 kappa(t) A + 2 lambda n0
//   dA/dt = -2 lambda A + kappa(t) (2 n + c),  c = 1 quantum / 0 classical,
// with classic fixed-step RK4 on the grid given by dt. The bath feeding
// strength 2 lambda n0 is the fluctuation-dissipation choice that makes the
// kappa0 = 0 dynamics relax to the thermal input. A step-halving self-test
// re-integrates at dt/2; if any grid value moves by more than 1e-6 relative,
// throws std::runtime_error advising a smaller dt.
MomentTrajectory evolve_lossy(const LossyParams& p);

// Moments at one instant from the explicit solution of the Langevin
// equations: homogeneous squeezed-thermal part damped by e^{-2 lambda t}
// plus the noise-feeding integrals, evaluated by adaptive Simpson
// quadrature to absolute tolerance quad_tol. Independent of evolve_lossy
// (no ODE stepping), so the two serve as mutual oracles. Throws
// std::domain_error for t outside [0, t_max], std::runtime_error if the
// quadrature fails to converge.
GaussianMoments quadrature_moments(const LossyParams& p, double t,
                                   double quad_tol = 1e-9);

}  // namespace pdc

#endif  // PDC_DYNAMICS_HPP
