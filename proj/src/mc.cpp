#include "pdc/mc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "pdc/rng.hpp"

namespace pdc {

namespace {

using Complex = std::complex<double>;

struct Amplitudes {
  Complex ah, av, bh, bv;
};

// Per-sample classical observables: the Stokes vector of each arm from the
// amplitude pair (h, v), then J = J_A + J_B.
struct SampleStats {
  double j_sq;
  double total_n;
};

SampleStats observables(const Amplitudes& w) {
  const auto arm = [](Complex h, Complex v) {
    return std::array<double, 3>{
        (std::conj(h) * v).real(),           // J_x = Re(h* v)
        (std::conj(h) * v).imag(),           // J_y = Im(h* v)
        0.5 * (std::norm(h) - std::norm(v))  // J_z
    };
  };
  const auto ja = arm(w.ah, w.av);
  const auto jb = arm(w.bh, w.bv);
  double j_sq = 0.0;
  for (int u = 0; u < 3; ++u) {
    const double c = ja[u] + jb[u];
    j_sq += c * c;
  }
  const double total_n =
      std::norm(w.ah) + std::norm(w.av) + std::norm(w.bh) + std::norm(w.bv);
  return {j_sq, total_n};
}

Amplitudes draw_thermal(Xoshiro256pp& rng, double n0) {
  return {complex_gaussian(rng, n0), complex_gaussian(rng, n0),
          complex_gaussian(rng, n0), complex_gaussian(rng, n0)};
}

// Classical counterpart of the pair-squeezing map: amplitudes mix with the
// conjugate of their cross-arm partner, signs matching the operator map.
Amplitudes squeeze(const Amplitudes& w, double r) {
  const double c = std::cosh(r);
  const double s = std::sinh(r);
  return {c * w.ah + s * std::conj(w.bv), c * w.av - s * std::conj(w.bh),
          c * w.bh - s * std::conj(w.av), c * w.bv + s * std::conj(w.ah)};
}

// Euler-Maruyama for the classical Langevin equations: deterministic drift
// -lambda a + kappa(t) (partner)*, complex white noise with
// <|dW|^2> = 2 lambda n0 dt per mode (each component N(0, lambda n0 dt)).
Amplitudes propagate_lossy(Xoshiro256pp& rng, const LossyParams& p,
                           Amplitudes w) {
  const auto n_steps = static_cast<std::size_t>(std::llround(p.t_max / p.dt));
  const double noise_sigma = std::sqrt(p.lambda * p.n0 * p.dt);
  for (std::size_t k = 0; k < n_steps; ++k) {
    const double t = static_cast<double>(k) * p.dt;
    const double kap = p.kappa0 * std::exp(-p.Lambda * t);
    const Amplitudes drift{-p.lambda * w.ah + kap * std::conj(w.bv),
                           -p.lambda * w.av - kap * std::conj(w.bh),
                           -p.lambda * w.bh - kap * std::conj(w.av),
                           -p.lambda * w.bv + kap * std::conj(w.ah)};
    // Fixed draw order (ah, av, bh, bv) keeps runs bit-reproducible.
    const auto noise = [&rng, noise_sigma]() {
      const NormalPair g = box_muller(rng);
      return Complex{noise_sigma * g.first, noise_sigma * g.second};
    };
    w.ah += p.dt * drift.ah + noise();
    w.av += p.dt * drift.av + noise();
    w.bh += p.dt * drift.bh + noise();
    w.bv += p.dt * drift.bv + noise();
  }
  return w;
}

struct Accumulator {
  double sum_j = 0.0, sum_jj = 0.0;
  double sum_n = 0.0, sum_nn = 0.0;
  double sum_jn = 0.0;
  std::uint64_t count = 0;

  void add(const SampleStats& s) {
    sum_j += s.j_sq;
    sum_jj += s.j_sq * s.j_sq;
    sum_n += s.total_n;
    sum_nn += s.total_n * s.total_n;
    sum_jn += s.j_sq * s.total_n;
    ++count;
  }
};

constexpr std::uint64_t kBlockSize = 8192;

}  // namespace

McEstimate mc_estimate(const McConfig& config, McObservable observable) {
  if (config.samples == 0) {
    throw std::invalid_argument("mc_estimate: samples must be >= 1");
  }
  const bool lossless = std::holds_alternative<SteadyParams>(config.params);
  StatKind stat;
  double n0;
  if (lossless) {
    const auto& p = std::get<SteadyParams>(config.params);
    validate_params(p);
    stat = p.stat;
    n0 = p.n0;
  } else {
    const auto& p = std::get<LossyParams>(config.params);
    validate_params(p);
    stat = p.stat;
    n0 = p.n0;
  }
  if (stat != StatKind::Classical) {
    throw std::invalid_argument(
        "mc_estimate: the sampler realizes classical statistics only");
  }

  // Blocked accumulation: every block owns an RNG stream derived from
  // (seed, block index), so the sample set is independent of any future
  // parallel scheduling and bit-identical across reruns.
  Accumulator acc;
  const std::uint64_t n_blocks = (config.samples + kBlockSize - 1) / kBlockSize;
  for (std::uint64_t block = 0; block < n_blocks; ++block) {
    Xoshiro256pp rng(config.seed, block);
    const std::uint64_t begin = block * kBlockSize;
    const std::uint64_t end = std::min(config.samples, begin + kBlockSize);
    for (std::uint64_t s = begin; s < end; ++s) {
      Amplitudes w = draw_thermal(rng, n0);
      if (lossless) {
        w = squeeze(w, std::get<SteadyParams>(config.params).r);
      } else {
        w = propagate_lossy(rng, std::get<LossyParams>(config.params), w);
      }
      acc.add(observables(w));
    }
  }

  const auto ns = static_cast<double>(acc.count);
  const double mean_j = acc.sum_j / ns;
  const double mean_n = acc.sum_n / ns;
  // Unbiased sample variances / covariance of the per-sample observables.
  const double var_j = (acc.sum_jj - ns * mean_j * mean_j) / (ns - 1.0);
  const double var_n = (acc.sum_nn - ns * mean_n * mean_n) / (ns - 1.0);
  const double cov_jn = (acc.sum_jn - ns * mean_j * mean_n) / (ns - 1.0);

  McEstimate est;
  switch (observable) {
    case McObservable::JSquared:
      est.mean = mean_j;
      est.std_error = std::sqrt(std::max(0.0, var_j) / ns);
      break;
    case McObservable::TotalN:
      est.mean = mean_n;
      est.std_error = std::sqrt(std::max(0.0, var_n) / ns);
      break;
    case McObservable::Ratio: {
      if (mean_n == 0.0) {
        throw std::domain_error("mc_estimate: ratio undefined, <N> = 0");
      }
      est.mean = mean_j / mean_n;
      // Delta method for the ratio of two correlated means.
      const double var_ratio =
          var_j / (mean_n * mean_n) +
          var_n * mean_j * mean_j / (mean_n * mean_n * mean_n * mean_n) -
          2.0 * cov_jn * mean_j / (mean_n * mean_n * mean_n);
      est.std_error = std::sqrt(std::max(0.0, var_ratio) / ns);
      break;
    }
  }
  if (acc.count == 1) est.std_error = 0.0;
  return est;
}

}  // namespace pdc
