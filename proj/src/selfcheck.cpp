#include "pdc/selfcheck.hpp"

#include <cmath>
#include <sstream>

#include "pdc/criteria.hpp"
#include "pdc/dynamics.hpp"
#include "pdc/fock.hpp"
#include "pdc/mc.hpp"

namespace pdc {

namespace {

std::string err_detail(double worst, double tol) {
  std::ostringstream os;
  os.precision(3);
  os << "worst error " << std::scientific << worst << " (tol " << tol << ")";
  return os.str();
}

// Closed-form ratio vs the Wick-engine path over the standard (r, n0) grid.
CheckResult check_closed_forms() {
  const double tol = 1e-9;
  double worst = 0.0;
  for (const double r : {0.0, 0.5, 1.0, 2.0, 3.0}) {
    for (const double n0 : {0.0, 0.1, 0.3, 1.0, 5.0}) {
      for (const StatKind stat : {StatKind::Quantum, StatKind::Classical}) {
        const SteadyParams p{r, n0, stat};
        // The ratio is undefined where the state is vacuum: quantum needs
        // n0 > 0 or r > 0, classical needs n0 > 0.
        if (stat == StatKind::Classical && n0 == 0.0) continue;
        if (stat == StatKind::Quantum && n0 == 0.0 && r == 0.0) continue;
        const double closed = closed_form_ratio(p);
        const double wick = separability_ratio(evolve_lossless(p)).ratio;
        // Zero targets (quantum vacuum input) are compared absolutely.
        const double scale = closed == 0.0 ? 1.0 : std::abs(closed);
        worst = std::max(worst, std::abs(wick - closed) / scale);
      }
    }
  }
  return {"closed-form ratio vs Wick engine", worst < tol,
          err_detail(worst, tol)};
}

CheckResult check_threshold() {
  const double tol = 1e-8;
  double worst = 0.0;
  for (const double n0 : {0.01, 0.1, 1.0, 10.0}) {
    const double r_star = entanglement_threshold(n0);
    const auto rep =
        separability_ratio(evolve_lossless({r_star, n0, StatKind::Quantum}));
    worst = std::max(worst, std::abs(rep.ratio - 0.5));
  }
  return {"entanglement threshold lands on ratio 1/2", worst < tol,
          err_detail(worst, tol)};
}

CheckResult check_fock_oracle() {
  const double tol = 1e-6;
  double worst = 0.0;
  const CorrelatorSpec cross_pair{2, 1, 1, 1};  // a_h b_v
  const CorrelatorSpec same_mode{2, 2, 2, 2};   // a_h^2
  for (const double r : {0.1, 0.3, 0.5}) {
    const FockConfig fc{12, r};
    const GaussianMoments g = evolve_lossless({r, 0.0, StatKind::Quantum});
    const double pairs[][2] = {
        {fock_expectation(fc, FockObservable::total_n()).value,
         total_number(g)},
        {fock_expectation(fc, FockObservable::j_squared()).value,
         j_squared(g)},
        {fock_expectation(fc, FockObservable::b_correlator(cross_pair)).value,
         b_correlator(g, cross_pair)},
        {fock_expectation(fc, FockObservable::b_correlator(same_mode)).value,
         b_correlator(g, same_mode)},
    };
    for (const auto& pv : pairs) {
      // J^2 is 0 on both sides up to roundoff; an absolute floor of tol
      // keeps the relative comparison meaningful there.
      const double scale = std::max({std::abs(pv[1]), std::abs(pv[0]), 1.0});
      worst = std::max(worst, std::abs(pv[0] - pv[1]) / scale);
    }
  }
  return {"truncated-Fock oracle vs Wick engine", worst < tol,
          err_detail(worst, tol)};
}

CheckResult check_lossy_cross_oracle() {
  const double tol = 1e-6;
  LossyParams p{1.0, 0.1, 0.1, 0.3, 50.0, 2.5e-4, StatKind::Quantum};
  double worst = 0.0;
  for (const StatKind stat : {StatKind::Quantum, StatKind::Classical}) {
    p.stat = stat;
    p.n0 = stat == StatKind::Quantum ? 0.3 : 0.8;
    const MomentTrajectory traj = evolve_lossy(p);
    const std::size_t stride = std::max<std::size_t>(1, traj.size() / 25);
    std::vector<std::size_t> samples;
    for (std::size_t k = 0; k < traj.size(); k += stride) samples.push_back(k);
    samples.push_back(traj.size() - 1);
    for (const std::size_t k : samples) {
      const GaussianMoments q = quadrature_moments(p, traj.time[k]);
      const double n_quad = q.normal(0, 0).real();
      const double a_quad = q.anomalous(0, 3).real();
      worst = std::max(worst, std::abs(traj.occupation[k] - n_quad));
      worst = std::max(worst, std::abs(traj.pairing[k] - a_quad));
    }
  }
  return {"lossy RK4 vs explicit-solution quadrature", worst < tol,
          err_detail(worst, tol)};
}

CheckResult check_physicality() {
  std::size_t violations = 0;
  std::string first;
  const auto record = [&](const std::vector<MomentViolation>& v,
                          const std::string& where) {
    violations += v.size();
    if (!v.empty() && first.empty()) {
      first = where + ": " + v.front().describe();
    }
  };

  for (const double r : {0.0, 0.5, 1.0, 2.0, 3.0}) {
    for (const double n0 : {0.0, 0.3, 1.0}) {
      for (const StatKind stat : {StatKind::Quantum, StatKind::Classical}) {
        record(validate(evolve_lossless({r, n0, stat})),
               "lossless r=" + std::to_string(r));
      }
    }
  }
  LossyParams p{1.0, 0.1, 0.1, 0.3, 20.0, 1e-3, StatKind::Quantum};
  for (const StatKind stat : {StatKind::Quantum, StatKind::Classical}) {
    p.stat = stat;
    const MomentTrajectory traj = evolve_lossy(p);
    for (std::size_t k = 0; k < traj.size(); ++k) {
      record(validate(traj.moments_at(k)), "lossy t=" + std::to_string(traj.time[k]));
    }
  }
  return {"physicality of all generated states", violations == 0,
          violations == 0 ? "no violations" : first};
}

CheckResult check_mc_oracle(std::uint64_t seed) {
  // Twelve fixed scenarios: six lossless, six lossy. Each must reproduce
  // the deterministic classical ratio and total photon number within four
  // standard errors.
  double worst_sigma = 0.0;
  std::string worst_name;
  int idx = 0;

  const auto compare = [&](const McConfig& cfg, double det_ratio,
                           double det_n, const std::string& name) {
    const McEstimate ratio = mc_estimate(cfg, McObservable::Ratio);
    const McEstimate total = mc_estimate(cfg, McObservable::TotalN);
    const double s_ratio =
        std::abs(ratio.mean - det_ratio) / std::max(ratio.std_error, 1e-300);
    const double s_total =
        std::abs(total.mean - det_n) / std::max(total.std_error, 1e-300);
    const double s = std::max(s_ratio, s_total);
    if (s > worst_sigma) {
      worst_sigma = s;
      worst_name = name;
    }
  };

  for (const double n0 : {0.4, 0.8}) {
    for (const double r : {0.0, 0.7, 1.5}) {
      const SteadyParams det{r, n0, StatKind::Classical};
      const GaussianMoments g = evolve_lossless(det);
      McConfig cfg{20000, seed + static_cast<std::uint64_t>(idx), det};
      compare(cfg, separability_ratio(g).ratio, total_number(g),
              "lossless n0=" + std::to_string(n0) + " r=" + std::to_string(r));
      ++idx;
    }
  }

  const LossyParams bases[] = {
      {1.0, 0.1, 0.1, 0.0, 1.0, 1e-3, StatKind::Classical},
      {0.5, 0.0, 0.2, 0.0, 1.5, 1e-3, StatKind::Classical},
      {0.0, 0.0, 0.3, 0.0, 2.0, 1e-3, StatKind::Classical},
  };
  for (const double n0 : {0.4, 0.8}) {
    for (LossyParams base : bases) {
      base.n0 = n0;
      const MomentTrajectory traj = evolve_lossy(base);
      const GaussianMoments g = traj.moments_at(traj.size() - 1);
      McConfig cfg{10000, seed + static_cast<std::uint64_t>(idx), base};
      compare(cfg, separability_ratio(g).ratio, total_number(g),
              "lossy n0=" + std::to_string(n0) +
                  " kappa0=" + std::to_string(base.kappa0));
      ++idx;
    }
  }

  std::ostringstream os;
  os.precision(3);
  os << "worst deviation " << worst_sigma << " sigma (" << worst_name
     << "), limit 4";
  return {"Monte Carlo vs deterministic classical moments", worst_sigma < 4.0,
          os.str()};
}

}  // namespace

std::vector<CheckResult> run_selfcheck(std::uint64_t seed) {
  std::vector<CheckResult> out;
  out.push_back(check_closed_forms());
  out.push_back(check_threshold());
  out.push_back(check_fock_oracle());
  out.push_back(check_lossy_cross_oracle());
  out.push_back(check_physicality());
  out.push_back(check_mc_oracle(seed));
  return out;
}

}  // namespace pdc
