#include "pdc/wick.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace pdc {

namespace {

using Complex = MomentScalar;  // extended precision, see moments.hpp

// Contraction of an ordered factor pair (f appears left of s in the product).
Complex contract(const GaussianMoments& g, const OperatorFactor& f,
                 const OperatorFactor& s) {
  const int i = f.mode.flat();
  const int j = s.mode.flat();
  if (f.dagger && !s.dagger) return g.normal(i, j);
  if (!f.dagger && s.dagger) {
    Complex v = g.normal(j, i);
    if (g.stat == StatKind::Quantum && i == j) v += MomentReal{1};
    return v;
  }
  if (!f.dagger && !s.dagger) return g.anomalous(i, j);
  return std::conj(g.anomalous(i, j));
}

struct PairingSum {
  const GaussianMoments& g;
  std::array<OperatorFactor, kMaxWickFactors> factor;
  std::array<bool, kMaxWickFactors> used{};
  std::size_t count = 0;

  // Pairs the first unused factor with every unused partner to its right;
  // the pair-product prefix is carried along and branches that hit an exact
  // zero are pruned before recursing.
  Complex accumulate(std::size_t remaining, Complex prefix) {
    if (remaining == 0) return prefix;
    std::size_t first = 0;
    while (used[first]) ++first;
    used[first] = true;
    Complex total{};
    for (std::size_t partner = first + 1; partner < count; ++partner) {
      if (used[partner]) continue;
      const Complex pair = contract(g, factor[first], factor[partner]);
      if (pair == Complex{}) continue;
      used[partner] = true;
      total += accumulate(remaining - 2, prefix * pair);
      used[partner] = false;
    }
    used[first] = false;
    return total;
  }
};

}  // namespace

Complex wick_moment(const GaussianMoments& g,
                    std::span<const OperatorFactor> factors,
                    std::size_t max_factors) {
  const std::size_t cap = std::min(max_factors, kMaxWickFactors);
  if (factors.size() > cap) {
    throw std::length_error("wick_moment: " + std::to_string(factors.size()) +
                            " factors exceeds cap of " + std::to_string(cap));
  }
  if (factors.size() % 2 != 0) return Complex{};  // zero-mean state
  if (factors.empty()) return Complex{1};

  PairingSum sum{g, {}, {}, factors.size()};
  std::copy(factors.begin(), factors.end(), sum.factor.begin());
  return sum.accumulate(factors.size(), Complex{1});
}

}  // namespace pdc
