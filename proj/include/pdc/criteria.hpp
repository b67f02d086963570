#ifndef PDC_CRITERIA_HPP
#define PDC_CRITERIA_HPP

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "pdc/dynamics.hpp"
#include "pdc/moments.hpp"
#include "pdc/wick.hpp"

namespace pdc {

// Indices of one member of the correlator family
//   B^(n)_{m,l,k} = (b_v)^{n-m} (b_h)^{m-l} (a_v)^{l-k} (a_h)^k,
// i.e. exponents (n-m, m-l, l-k, k) on (b_v, b_h, a_v, a_h).
struct CorrelatorSpec {
  int n = 1;
  int m = 1;
  int l = 1;
  int k = 1;
};

// Throws std::invalid_argument unless n >= 1 and 0 <= k <= l <= m <= n.
void validate_spec(const CorrelatorSpec& s);

// Result of the angular-momentum separability criterion on one state.
struct CriterionReport {
  double j_squared = 0.0;
  double total_n = 0.0;
  double ratio = 0.0;
  bool entangled = false;  // quantum statistics only: ratio < 1/2
};

// Total photon number <N> = sum of the four occupations.
double total_number(const GaussianMoments& g);

// Total Stokes angular momentum <J^2>, J = J^A + J^B, built from the
// polarization Stokes components of each arm (z from the h/v intensity
// difference, x from the +/-45 degree basis, y from the circular basis).
// The quartic operator strings are expanded programmatically and every
// term is evaluated through wick_moment, so no closed-form result is
// assumed anywhere in this path.
double j_squared(const GaussianMoments& g);

// ratio = j_squared / total_number plus the entanglement verdict
// (quantum ratio < 1/2 certifies non-separability of the two arms).
// Throws std::domain_error when total_number is 0 (vacuum): the ratio is
// undefined pointwise; sweeps should use closed_form_ratio's limit instead.
CriterionReport separability_ratio(const GaussianMoments& g);

// Closed-form <J^2>/<N> for the lossless cavity, used as an independent
// oracle against the Wick path:
//   quantum:   3 n0 (n0 + 1) / (4 n(r)),  n(r) = sinh^2 r + n0 (1 + 2 sinh^2 r)
//   classical: 3 n0 / (4 (1 + 2 sinh^2 r))
// Both follow from conservation of J^2 under the pair-squeezing interaction
// (the generator is a polarization singlet), which pins <J^2> at its r = 0
// thermal value 3 n0 (n0 + 1) (resp. 3 n0^2), while <N> grows as 4 n(r).
// The quantum vacuum (n0 = 0) returns the limit value 0.
double closed_form_ratio(const SteadyParams& p);

// Interaction parameter r* at which the quantum ratio crosses 1/2:
// sinh^2 r* = n0 (3 n0 + 1) / (2 (2 n0 + 1)). States with r > r* are
// entangled despite the thermal noise n0. Throws std::domain_error for
// negative or non-finite n0.
double entanglement_threshold(double n0);

// <B^(n)+ B^(n)> for one correlator spec: the 2n-factor string (daggered
// factors first, exponents reversed) evaluated through wick_moment with the
// state's statistics. Result is a norm-squared expectation, hence real and
// non-negative. Throws std::length_error if 2n exceeds the Wick cap.
double b_correlator(const GaussianMoments& g, const CorrelatorSpec& spec,
                    std::size_t max_factors = kMaxWickFactors);

// Cross-family correlator <B^(na)+ B^(nb)> for two different specs; used to
// probe which off-diagonal pairs vanish identically. Vanishing is guaranteed
// whenever the two specs cannot be matched by the pair-squeezing contraction
// channels (Ah-Bv, Av-Bh and the intensity channels), e.g. for odd total
// order or mismatched channel counts.
std::complex<double> cross_correlator(const GaussianMoments& g,
                                      const CorrelatorSpec& a,
                                      const CorrelatorSpec& b,
                                      std::size_t max_factors = kMaxWickFactors);

// Quantum/classical correlator ratio as a function of r, with the classical
// comparison ensemble at n0c = n0 + 1/2 (vacuum-fluctuation matching). Also
// spot-checks a small sample of structurally-vanishing off-diagonal pairs
// (both statistics) and throws std::runtime_error if any fails to vanish.
// Throws std::domain_error if a classical denominator is 0.
std::vector<std::pair<double, double>> qc_ratio(const CorrelatorSpec& spec,
                                                const SteadyParams& params_q,
                                                std::span<const double> r_values);

}  // namespace pdc

#endif  // PDC_CRITERIA_HPP
