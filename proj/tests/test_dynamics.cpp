#include <cmath>
#include <limits>

#include "doctest.h"
#include "pdc/dynamics.hpp"

using namespace pdc;

namespace {

constexpr int kAh = 0, kAv = 1, kBh = 2, kBv = 3;

}  // namespace

TEST_CASE("evolve_lossless at r=0 is the thermal input") {
  for (const StatKind stat : {StatKind::Quantum, StatKind::Classical}) {
    const GaussianMoments g = evolve_lossless({0.0, 0.3, stat});
    const GaussianMoments want = thermal_state(0.3, stat);
    CHECK((g.normal - want.normal).norm() < 1e-15);
    CHECK(g.anomalous.norm() < 1e-15);
  }
}

TEST_CASE("evolve_lossless quantum closed forms (vacuum input)") {
  const GaussianMoments g = evolve_lossless({1.0, 0.0, StatKind::Quantum});
  // n(r) = sinh^2 r, A = sinh(2r)/2 for n0 = 0.
  const double n = 1.3810978455418157;
  const double a = 1.8134302039235094;
  for (int i = 0; i < 4; ++i) {
    CHECK(g.normal(i, i).real() == doctest::Approx(n).epsilon(1e-14));
  }
  CHECK(g.anomalous(kAh, kBv).real() == doctest::Approx(a).epsilon(1e-14));
  CHECK(g.anomalous(kAv, kBh).real() == doctest::Approx(-a).epsilon(1e-14));
  CHECK(g.anomalous(kBv, kAh).real() == doctest::Approx(a).epsilon(1e-14));
  CHECK(g.anomalous(kBh, kAv).real() == doctest::Approx(-a).epsilon(1e-14));
  // Every other entry is zero.
  double off = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j) off += std::abs(g.normal(i, j));
      const bool pair = (i == kAh && j == kBv) || (i == kBv && j == kAh) ||
                        (i == kAv && j == kBh) || (i == kBh && j == kAv);
      if (!pair) off += std::abs(g.anomalous(i, j));
    }
  }
  CHECK(off < 1e-14);
  CHECK(validate(g).empty());
}

TEST_CASE("evolve_lossless with thermal input, both statistics") {
  const GaussianMoments q = evolve_lossless({1.0, 0.3, StatKind::Quantum});
  CHECK(q.normal(0, 0).real() ==
        doctest::Approx(2.5097565528669052).epsilon(1e-14));
  CHECK(q.anomalous(kAh, kBv).real() ==
        doctest::Approx(2.901488326277615).epsilon(1e-14));

  // Classical: n = n0 (1 + 2 sinh^2 r), A = n0 sinh(2r) -- no spontaneous
  // term, amplitudes grow only by stimulated scattering off the noise.
  const GaussianMoments c = evolve_lossless({1.0, 0.3, StatKind::Classical});
  CHECK(c.normal(0, 0).real() ==
        doctest::Approx(1.1286587073250894).epsilon(1e-14));
  CHECK(c.anomalous(kAh, kBv).real() ==
        doctest::Approx(1.0880581223541057).epsilon(1e-14));
  CHECK(validate(q).empty());
  CHECK(validate(c).empty());
}

TEST_CASE("vacuum-matched classical ensemble reproduces |A| exactly") {
  for (const double r : {0.5, 1.0, 2.0}) {
    for (const double n0 : {0.0, 0.3, 1.0}) {
      const GaussianMoments q = evolve_lossless({r, n0, StatKind::Quantum});
      const GaussianMoments c =
          evolve_lossless({r, n0 + 0.5, StatKind::Classical});
      const double aq = std::abs(q.anomalous(kAh, kBv));
      const double ac = std::abs(c.anomalous(kAh, kBv));
      CHECK(std::abs(aq - ac) < 1e-12 * std::max(1.0, aq));
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(evolve_lossless({-0.1, 0.0, StatKind::Quantum}),
                  std::domain_error);
  CHECK_THROWS_AS(evolve_lossless({1.0, -0.2, StatKind::Quantum}),
                  std::domain_error);
  LossyParams p;
  p.dt = 0.0;
  CHECK_THROWS_AS(evolve_lossy(p), std::domain_error);
  p = LossyParams{};
  p.dt = p.t_max * 2.0;
  CHECK_THROWS_AS(evolve_lossy(p), std::domain_error);
  p = LossyParams{};
  p.lambda = -1.0;
  CHECK_THROWS_AS(evolve_lossy(p), std::domain_error);
}

TEST_CASE("delta_kernel closed form and branches") {
  LossyParams p;
  p.kappa0 = 1.0;
  p.Lambda = 0.1;
  CHECK(delta_kernel(p, 2.0, 2.0) == 0.0);
  CHECK(delta_kernel(p, std::numeric_limits<double>::infinity(), 0.0) ==
        doctest::Approx(10.0).epsilon(1e-15));
  CHECK(delta_kernel(p, 50.0, 0.0) ==
        doctest::Approx(9.9326205300091453).epsilon(1e-14));
  CHECK_THROWS_AS(delta_kernel(p, 1.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(delta_kernel(p, 1.0, -0.5), std::domain_error);

  // Lambda = 0 takes the explicit constant-coupling branch...
  p.Lambda = 0.0;
  CHECK(delta_kernel(p, 2.0, 0.0) == 2.0);
  // ...which the generic formula approaches continuously.
  p.Lambda = 1e-9;
  CHECK(delta_kernel(p, 2.0, 0.0) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("pure damping holds the bath occupation fixed") {
  // kappa0 = 0: the noise feeding must balance the loss exactly at n = n0,
  // which pins the fluctuation-dissipation normalization.
  LossyParams p{0.0, 0.0, 0.3, 0.8, 10.0, 1e-3, StatKind::Quantum};
  const MomentTrajectory traj = evolve_lossy(p);
  for (std::size_t k = 0; k < traj.size(); k += 500) {
    CHECK(traj.occupation[k] == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(std::abs(traj.pairing[k]) < 1e-14);
  }
}

TEST_CASE("lossless limit reduces to the Bogoliubov map at r = kappa0 t") {
  LossyParams p{0.6, 0.0, 0.0, 0.25, 2.0, 1e-3, StatKind::Quantum};
  const MomentTrajectory traj = evolve_lossy(p);
  for (const std::size_t k : {std::size_t{400}, std::size_t{2000}}) {
    const double r = 0.6 * traj.time[k];
    const GaussianMoments want = evolve_lossless({r, 0.25, StatKind::Quantum});
    const double n_want = want.normal(0, 0).real();
    const double a_want = want.anomalous(kAh, kBv).real();
    CHECK(std::abs(traj.occupation[k] - n_want) < 1e-8 * n_want);
    CHECK(std::abs(traj.pairing[k] - a_want) < 1e-8 * a_want);
  }
}

TEST_CASE("step-halving self-test rejects a too-coarse grid") {
  LossyParams p{1.0, 0.0, 0.0, 0.0, 10.0, 0.5, StatKind::Quantum};
  CHECK_THROWS_AS(evolve_lossy(p), std::runtime_error);
}

TEST_CASE("trajectory materializes the paired moment structure") {
  LossyParams p{1.0, 0.1, 0.1, 0.3, 2.0, 1e-3, StatKind::Quantum};
  const MomentTrajectory traj = evolve_lossy(p);
  const GaussianMoments g = traj.moments_at(traj.size() - 1);
  CHECK(g.normal(0, 0).real() == traj.occupation.back());
  CHECK(g.anomalous(kAh, kBv).real() == traj.pairing.back());
  CHECK(g.anomalous(kAv, kBh).real() == -traj.pairing.back());
  CHECK(validate(g).empty());
}

TEST_CASE("quadrature at t=0 is the thermal state") {
  LossyParams p{1.0, 0.1, 0.1, 0.3, 10.0, 1e-3, StatKind::Quantum};
  const GaussianMoments g = quadrature_moments(p, 0.0);
  CHECK(g.normal(0, 0).real() == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(std::abs(g.anomalous(kAh, kBv)) < 1e-15);
  CHECK_THROWS_AS(quadrature_moments(p, -1.0), std::domain_error);
  CHECK_THROWS_AS(quadrature_moments(p, 11.0), std::domain_error);
}

TEST_CASE("lossless quadrature equals the Bogoliubov map at Delta(t,0)") {
  LossyParams p{0.8, 0.3, 0.0, 0.2, 5.0, 1e-3, StatKind::Quantum};
  for (const double t : {1.0, 3.0}) {
    const GaussianMoments g = quadrature_moments(p, t);
    const double r = delta_kernel(p, t, 0.0);
    const GaussianMoments want = evolve_lossless({r, 0.2, StatKind::Quantum});
    CHECK(g.normal(0, 0).real() ==
          doctest::Approx(want.normal(0, 0).real()).epsilon(1e-12));
    CHECK(g.anomalous(kAh, kBv).real() ==
          doctest::Approx(want.anomalous(kAh, kBv).real()).epsilon(1e-12));
  }
}

TEST_CASE("quadrature matches the high-precision reference trajectory") {
  // Reference values computed from the explicit solution with 40-digit
  // arithmetic; the hardest points sit near the occupation peak (~2.7e5
  // around t = 23), where absolute accuracy requires ~1e-11 relative.
  LossyParams p{1.0, 0.1, 0.1, 0.3, 50.0, 1e-3, StatKind::Quantum};
  struct Ref {
    double t, n, a;
  };
  const Ref quantum_refs[] = {
      {1.0, 1.9872253015491024, 2.3217966485125085},
      {5.0, 430.25783939962691, 430.65071992626632},
      {20.0, 265545.86373023881, 265546.0595721977},
      {50.0, 8617.3127426201887, 8617.0946598110515},
  };
  for (const auto& ref : quantum_refs) {
    const GaussianMoments g = quadrature_moments(p, ref.t);
    CHECK(std::abs(g.normal(0, 0).real() - ref.n) < 1e-6);
    CHECK(std::abs(g.anomalous(kAh, kBv).real() - ref.a) < 1e-6);
  }

  p.stat = StatKind::Classical;
  p.n0 = 0.8;
  const GaussianMoments gc = quadrature_moments(p, 5.0);
  CHECK(std::abs(gc.normal(0, 0).real() - 430.75783939962691) < 1e-6);
  CHECK(std::abs(gc.anomalous(kAh, kBv).real() - 430.65071992626632) < 1e-6);
}

TEST_CASE("RK4 endpoint agrees with the reference at fine dt") {
  LossyParams p{1.0, 0.1, 0.1, 0.3, 5.0, 1.25e-4, StatKind::Quantum};
  const MomentTrajectory traj = evolve_lossy(p);
  CHECK(std::abs(traj.occupation.back() - 430.25783939962691) < 1e-7);
  CHECK(std::abs(traj.pairing.back() - 430.65071992626632) < 1e-7);
}
