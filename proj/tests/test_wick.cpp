#include <algorithm>
#include <vector>

#include "doctest.h"
#include "pdc/dynamics.hpp"
#include "pdc/wick.hpp"

using namespace pdc;
using Complex = MomentScalar;

namespace {

// All second moments equal to 1: every contraction contributes exactly 1,
// so the Wick sum counts the perfect pairings, (2n-1)!!.
GaussianMoments all_ones_classical() {
  GaussianMoments g;
  g.stat = StatKind::Classical;
  g.normal.setOnes();
  g.anomalous.setOnes();
  return g;
}

std::vector<OperatorFactor> repeat_mode(ModeIndex m, bool dagger, int count) {
  return std::vector<OperatorFactor>(static_cast<std::size_t>(count),
                                     OperatorFactor{m, dagger});
}

}  // namespace

TEST_CASE("trivial lengths: empty product is 1, odd products vanish") {
  const GaussianMoments g = thermal_state(0.7, StatKind::Quantum);
  CHECK(wick_moment(g, {}) == Complex{1.0});
  const auto one = repeat_mode(kModeAh, false, 1);
  CHECK(wick_moment(g, one) == Complex{0.0});
  const auto three = repeat_mode(kModeAh, false, 3);
  CHECK(wick_moment(g, three) == Complex{0.0});
}

TEST_CASE("pair rules: normal, anomalous and the commutator term") {
  GaussianMoments g = thermal_state(0.4, StatKind::Quantum);
  g.anomalous(0, 3) = {0.2, 0.1};
  g.anomalous(3, 0) = {0.2, 0.1};

  const OperatorFactor ad{kModeAh, true}, a{kModeAh, false};
  const OperatorFactor bv{kModeBv, false}, bvd{kModeBv, true};

  const std::vector<OperatorFactor> number{ad, a};
  CHECK(wick_moment(g, number).real() == doctest::Approx(0.4).epsilon(1e-15));

  // <a a+> = <a+ a> + 1 for operators, no +1 for classical amplitudes.
  const std::vector<OperatorFactor> anti{a, ad};
  CHECK(wick_moment(g, anti).real() == doctest::Approx(1.4).epsilon(1e-15));
  g.stat = StatKind::Classical;
  CHECK(wick_moment(g, anti).real() == doctest::Approx(0.4).epsilon(1e-15));
  g.stat = StatKind::Quantum;

  const std::vector<OperatorFactor> pair{a, bv};
  CHECK(wick_moment(g, pair) == Complex{0.2, 0.1});
  const std::vector<OperatorFactor> pair_dag{ad, bvd};
  CHECK(wick_moment(g, pair_dag) == Complex{0.2, -0.1});
}

TEST_CASE("quartic on the squeezed state reproduces n(r)^2") {
  // <a+_Ah a+_Av a_Av a_Ah> on the lossless vacuum-input state: only the
  // two intensity contractions survive and give n(r)^2.
  const double r = 0.8;
  const GaussianMoments g = evolve_lossless({r, 0.0, StatKind::Quantum});
  const double n = std::sinh(r) * std::sinh(r);
  const std::vector<OperatorFactor> factors{
      {kModeAh, true}, {kModeAv, true}, {kModeAv, false}, {kModeAh, false}};
  CHECK(wick_moment(g, factors).real() ==
        doctest::Approx(n * n).epsilon(1e-12));
}

TEST_CASE("pairing count: all-ones state yields (2n-1)!! exactly") {
  const GaussianMoments g = all_ones_classical();
  const double expected[] = {1.0, 3.0, 15.0, 105.0, 945.0, 10395.0, 135135.0,
                             2027025.0};
  for (int n = 1; n <= 8; ++n) {
    const auto factors = repeat_mode(kModeAh, false, 2 * n);
    CHECK(wick_moment(g, factors).real() ==
          doctest::Approx(expected[n - 1]).epsilon(1e-12));
  }
}

TEST_CASE("factor cap is enforced") {
  const GaussianMoments g = all_ones_classical();
  const auto too_many = repeat_mode(kModeAh, false, 17);
  CHECK_THROWS_AS((void)wick_moment(g, too_many), std::length_error);
  const auto six = repeat_mode(kModeAh, false, 6);
  CHECK_THROWS_AS((void)wick_moment(g, six, 4), std::length_error);
  CHECK(wick_moment(g, six, 6).real() == doctest::Approx(15.0));
}

TEST_CASE("Hermiticity: reversed dagger-flipped string conjugates the value") {
  const GaussianMoments g = evolve_lossless({0.9, 0.25, StatKind::Quantum});
  const std::vector<std::vector<OperatorFactor>> strings = {
      {{kModeAh, true}, {kModeBv, true}, {kModeBv, false}, {kModeAh, false}},
      {{kModeAh, false}, {kModeBv, false}},
      {{kModeAv, true}, {kModeBh, false}, {kModeAh, true}, {kModeAh, false},
       {kModeBv, true}, {kModeAv, false}},
  };
  for (const auto& s : strings) {
    auto flipped = s;
    std::reverse(flipped.begin(), flipped.end());
    for (auto& f : flipped) f.dagger = !f.dagger;
    const Complex lhs = wick_moment(g, s);
    const Complex rhs = std::conj(wick_moment(g, flipped));
    CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("linearity in the moments: scaled classical state scales by s^n") {
  GaussianMoments g = evolve_lossless({0.6, 0.8, StatKind::Classical});
  GaussianMoments scaled = g;
  const MomentReal s = 1.7L;
  scaled.normal *= s;
  scaled.anomalous *= s;

  const std::vector<OperatorFactor> quartic{
      {kModeAh, true}, {kModeBv, true}, {kModeBv, false}, {kModeAh, false}};
  const Complex base = wick_moment(g, quartic);
  const Complex big = wick_moment(scaled, quartic);
  CHECK(std::abs(big - s * s * base) < 1e-12 * std::abs(big));

  const std::vector<OperatorFactor> sextic{
      {kModeAh, true},  {kModeAv, true},  {kModeBh, false},
      {kModeBv, false}, {kModeAh, false}, {kModeAh, true}};
  const Complex base6 = wick_moment(g, sextic);
  const Complex big6 = wick_moment(scaled, sextic);
  CHECK(std::abs(big6 - s * s * s * base6) <
        1e-12 * (1.0 + std::abs(big6)));
}
