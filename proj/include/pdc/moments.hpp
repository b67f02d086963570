#ifndef PDC_MOMENTS_HPP
#define PDC_MOMENTS_HPP

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "pdc/modes.hpp"

namespace pdc {

// Moments are stored and contracted in extended precision. Quartic
// observables built from them (<J^2> in particular) are near-complete
// cancellations of pairing terms of size ~n^2, so double-width storage
// floors those observables at machine-epsilon * n^2 — a spurious
// <J^2> ~ 1e-8 on strongly squeezed states. 80-bit storage pushes the
// floor three orders of magnitude down; scalar results are returned as
// plain double.
using MomentReal = long double;
using MomentScalar = std::complex<MomentReal>;
using MomentMatrix = Eigen::Matrix<MomentScalar, 4, 4>;

// Second-moment description of a zero-mean Gaussian four-mode state.
//   normal(i, j)    = <a^+_i a_j>   (Hermitian, non-negative diagonal)
//   anomalous(i, j) = <a_i a_j>     (symmetric)
// The same container describes classical Gaussian amplitude ensembles; the
// stat flag selects the contraction rules used downstream.
struct GaussianMoments {
  MomentMatrix normal = MomentMatrix::Zero();
  MomentMatrix anomalous = MomentMatrix::Zero();
  StatKind stat = StatKind::Quantum;
};

// Unpolarized thermal occupation n0 in every mode, no pair correlations.
// Throws std::domain_error for n0 < 0 or non-finite n0.
GaussianMoments thermal_state(double n0, StatKind stat);

// One violated physicality constraint, with the offending matrix entry.
struct MomentViolation {
  enum class Kind {
    NonFinite,          // entry is NaN/Inf
    NotHermitian,       // normal(i,j) != conj(normal(j,i))
    NegativeDiagonal,   // normal(i,i) < -tol
    NotSymmetric,       // anomalous(i,j) != anomalous(j,i)
    PairBoundExceeded,  // |anomalous(i,j)|^2 > bound from occupations
  };
  Kind kind;
  int i = 0;
  int j = 0;
  double magnitude = 0.0;  // size of the violation past the tolerance

  std::string describe() const;
};

// Checks Hermiticity / symmetry / diagonal positivity and the Cauchy-Schwarz
// pair bound |<a_i a_j>|^2 <= n_i (n_j + 1) for quantum statistics (the +1 is
// the commutator term), resp. |<α_i α_j>|^2 <= n_i n_j for classical
// ensembles, over all ordered pairs i != j. Equality is allowed (two-mode
// squeezed vacuum sits exactly on the boundary). Returns every violation
// found; an empty result means the moments are physical.
std::vector<MomentViolation> validate(const GaussianMoments& g,
                                      double tol = 1e-9);

}  // namespace pdc

#endif  // PDC_MOMENTS_HPP
