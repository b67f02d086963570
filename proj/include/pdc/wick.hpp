#ifndef PDC_WICK_HPP
#define PDC_WICK_HPP

#include <complex>
#include <cstddef>
#include <span>

#include "pdc/moments.hpp"

namespace pdc {

// Default and hard cap on the number of operator factors accepted by
// wick_moment. (2n-1)!! pairings at n=8 pairs is 2,027,025 terms before
// pruning, which is still fast; beyond that the caller should rethink.
inline constexpr std::size_t kMaxWickFactors = 16;

// Expectation value of an ordered product of mode operators (quantum) or
// Gaussian amplitudes (classical) in the zero-mean Gaussian state g, by
// summing over all complete pairings. Pair values for factors (f before s
// in the product):
//   <a^+_i a_j>   = normal(i, j)
//   <a_i a^+_j>   = normal(j, i) + delta_ij   (quantum)
//                 = normal(j, i)              (classical)
//   <a_i a_j>     = anomalous(i, j)
//   <a^+_i a^+_j> = conj(anomalous(i, j))
// Branches whose accumulated pair product is exactly zero are pruned.
// An odd number of factors gives exactly 0 (zero-mean state). An empty
// product gives 1. Throws std::length_error if factors.size() > max_factors.
//
// The result keeps the extended precision of the stored moments: consumers
// whose observable is a small difference of large pairings (<J^2> again)
// must not lose the cancellation to an intermediate double rounding.
MomentScalar wick_moment(const GaussianMoments& g,
                         std::span<const OperatorFactor> factors,
                         std::size_t max_factors = kMaxWickFactors);

}  // namespace pdc

#endif  // PDC_WICK_HPP
