#include "pdc/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace pdc {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::domain_error(msg);
}

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

void validate_params(const SteadyParams& p) {
  require(finite_nonneg(p.r), "SteadyParams: r must be finite and >= 0");
  require(finite_nonneg(p.n0), "SteadyParams: n0 must be finite and >= 0");
}

void validate_params(const LossyParams& p) {
  require(finite_nonneg(p.kappa0), "LossyParams: kappa0 must be finite and >= 0");
  require(finite_nonneg(p.Lambda), "LossyParams: Lambda must be finite and >= 0");
  require(finite_nonneg(p.lambda), "LossyParams: lambda must be finite and >= 0");
  require(finite_nonneg(p.n0), "LossyParams: n0 must be finite and >= 0");
  require(std::isfinite(p.t_max) && p.t_max > 0.0,
          "LossyParams: t_max must be finite and > 0");
  require(std::isfinite(p.dt) && p.dt > 0.0 && p.dt <= p.t_max,
          "LossyParams: dt must satisfy 0 < dt <= t_max");
}

GaussianMoments evolve_lossless(const SteadyParams& p) {
  validate_params(p);

  // Full second-moment matrix Sigma = <v v^T> for the operator vector
  // v = (a_Ah, a_Av, a_Bh, a_Bv, a+_Ah, a+_Av, a+_Bh, a+_Bv), conjugated by
  // the Bogoliubov matrix S of the pair-squeezing map
  //   a_Ah -> c a_Ah + s a+_Bv,   a_Av -> c a_Av - s a+_Bh,
  //   a_Bv -> c a_Bv + s a+_Ah,   a_Bh -> c a_Bh - s a+_Av,
  // c = cosh r, s = sinh r (daggered rows are the conjugates).
  const MomentReal c = std::cosh(static_cast<MomentReal>(p.r));
  const MomentReal s = std::sinh(static_cast<MomentReal>(p.r));

  Eigen::Matrix<MomentReal, 8, 8> S = Eigen::Matrix<MomentReal, 8, 8>::Zero();
  for (int i = 0; i < 8; ++i) S(i, i) = c;
  S(0, 7) = s;   // a_Ah <- a+_Bv
  S(1, 6) = -s;  // a_Av <- a+_Bh
  S(2, 5) = -s;  // a_Bh <- a+_Av
  S(3, 4) = s;   // a_Bv <- a+_Ah
  S(4, 3) = s;   // a+_Ah <- a_Bv
  S(5, 2) = -s;  // a+_Av <- a_Bh
  S(6, 1) = -s;  // a+_Bh <- a_Av
  S(7, 0) = s;   // a+_Bv <- a_Ah

  // Thermal input: <a+_i a_j> = n0 d_ij and <a_i a+_j> = (n0 + comm) d_ij,
  // comm = 1 for operators, 0 for classical amplitudes.
  const MomentReal comm = p.stat == StatKind::Quantum ? 1.0L : 0.0L;
  const MomentReal n0 = static_cast<MomentReal>(p.n0);
  Eigen::Matrix<MomentReal, 8, 8> Sigma = Eigen::Matrix<MomentReal, 8, 8>::Zero();
  for (int i = 0; i < 4; ++i) {
    Sigma(i, 4 + i) = n0 + comm;  // <a_i a+_i>
    Sigma(4 + i, i) = n0;         // <a+_i a_i>
  }

  const Eigen::Matrix<MomentReal, 8, 8> out = S * Sigma * S.transpose();

  GaussianMoments g;
  g.stat = p.stat;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      g.normal(i, j) = out(4 + i, j);   // <a+_i a_j>
      g.anomalous(i, j) = out(i, j);    // <a_i a_j>
    }
  }
  return g;
}

double delta_kernel(const LossyParams& p, double t, double t_prime) {
  validate_params(p);
  if (std::isnan(t) || std::isnan(t_prime) || t_prime < 0.0 || t_prime > t) {
    throw std::domain_error("delta_kernel: require 0 <= t' <= t");
  }
  if (p.Lambda == 0.0) return p.kappa0 * (t - t_prime);  // constant coupling
  return (p.kappa0 / p.Lambda) *
         (std::exp(-p.Lambda * t_prime) - std::exp(-p.Lambda * t));
}

GaussianMoments MomentTrajectory::moments_at(std::size_t k) const {
  const double n = occupation.at(k);
  const double A = pairing.at(k);
  GaussianMoments g;
  g.stat = stat;
  g.normal = MomentScalar(n) * MomentMatrix::Identity();
  const int Ah = kModeAh.flat(), Av = kModeAv.flat();
  const int Bh = kModeBh.flat(), Bv = kModeBv.flat();
  g.anomalous(Ah, Bv) = A;
  g.anomalous(Bv, Ah) = A;
  g.anomalous(Av, Bh) = -A;
  g.anomalous(Bh, Av) = -A;
  return g;
}

namespace {

// State y = (n, A) for one squeezed pair; both pairs evolve identically up
// to the sign of A, so one integration covers the four-mode state.
struct PairState {
  double n, A;
};

PairState rhs(const LossyParams& p, double comm, double t, PairState y) {
  const double kap = p.kappa0 * std::exp(-p.Lambda * t);
  return {-2.0 * p.lambda * y.n + 2.0 * kap * y.A + 2.0 * p.lambda * p.n0,
          -2.0 * p.lambda * y.A + kap * (2.0 * y.n + comm)};
}

PairState rk4_step(const LossyParams& p, double comm, double t, PairState y,
                   double h) {
  const PairState k1 = rhs(p, comm, t, y);
  const PairState k2 =
      rhs(p, comm, t + 0.5 * h,
          {y.n + 0.5 * h * k1.n, y.A + 0.5 * h * k1.A});
  const PairState k3 =
      rhs(p, comm, t + 0.5 * h,
          {y.n + 0.5 * h * k2.n, y.A + 0.5 * h * k2.A});
  const PairState k4 = rhs(p, comm, t + h, {y.n + h * k3.n, y.A + h * k3.A});
  return {y.n + h / 6.0 * (k1.n + 2.0 * k2.n + 2.0 * k3.n + k4.n),
          y.A + h / 6.0 * (k1.A + 2.0 * k2.A + 2.0 * k3.A + k4.A)};
}

// Integrates to every multiple of dt up to n_steps * dt, taking `substeps`
// RK4 steps per grid interval.
void integrate_grid(const LossyParams& p, double comm, std::size_t n_steps,
                    int substeps, std::vector<double>* n_out,
                    std::vector<double>* a_out) {
  PairState y{p.n0, 0.0};
  n_out->push_back(y.n);
  a_out->push_back(y.A);
  const double h = p.dt / substeps;
  for (std::size_t k = 0; k < n_steps; ++k) {
    const double t0 = static_cast<double>(k) * p.dt;
    for (int s = 0; s < substeps; ++s) {
      y = rk4_step(p, comm, t0 + s * h, y, h);
    }
    n_out->push_back(y.n);
    a_out->push_back(y.A);
  }
}

}  // namespace

MomentTrajectory evolve_lossy(const LossyParams& p) {
  validate_params(p);
  const double comm = p.stat == StatKind::Quantum ? 1.0 : 0.0;
  const auto n_steps =
      static_cast<std::size_t>(std::llround(p.t_max / p.dt));

  MomentTrajectory traj;
  traj.stat = p.stat;
  traj.time.reserve(n_steps + 1);
  for (std::size_t k = 0; k <= n_steps; ++k) {
    traj.time.push_back(static_cast<double>(k) * p.dt);
  }
  integrate_grid(p, comm, n_steps, 1, &traj.occupation, &traj.pairing);

  // Step-halving self-test: the same grid with two RK4 substeps per dt.
  // RK4's O(h^4) truncation error shrinks 16x, so a large shift between the
  // two runs means dt is too coarse for this parameter set.
  std::vector<double> n_half, a_half;
  n_half.reserve(n_steps + 1);
  a_half.reserve(n_steps + 1);
  integrate_grid(p, comm, n_steps, 2, &n_half, &a_half);
  double worst = 0.0;
  for (std::size_t k = 0; k <= n_steps; ++k) {
    const double scale_n = std::max(1.0, std::abs(n_half[k]));
    const double scale_a = std::max(1.0, std::abs(a_half[k]));
    worst = std::max(worst, std::abs(traj.occupation[k] - n_half[k]) / scale_n);
    worst = std::max(worst, std::abs(traj.pairing[k] - a_half[k]) / scale_a);
  }
  if (worst > 1e-6) {
    throw std::runtime_error(
        "evolve_lossy: step-halving self-test moved the solution by " +
        std::to_string(worst) + " relative; use a smaller dt");
  }
  return traj;
}

namespace {

// Adaptive Simpson with Richardson correction. Accepts an interval when the
// standard |S_fine - S_coarse| < 15 tol_i test passes or when the error
// estimate has hit the double-precision floor of the local interval value
// (the integrands here are non-negative, so |whole| is an honest local
// scale); the floor stops futile subdivision once roundoff dominates.
struct SimpsonQuad {
  int max_depth = 48;

  template <typename F>
  double integrate(const F& f, double a, double b, double tol) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return recurse(f, a, b, fa, fm, fb, whole, tol, max_depth);
  }

  template <typename F>
  double recurse(const F& f, double a, double b, double fa, double fm,
                 double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = f(0.5 * (a + m));
    const double rm = f(0.5 * (m + b));
    const double left = (m - a) / 6.0 * (fa + 4.0 * lm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * rm + fb);
    const double err = left + right - whole;
    const double floor =
        32.0 * std::numeric_limits<double>::epsilon() * std::abs(whole);
    if (std::abs(err) <= 15.0 * tol || std::abs(err) <= floor) {
      return left + right + err / 15.0;
    }
    if (depth <= 0) {
      throw std::runtime_error(
          "quadrature_moments: adaptive Simpson failed to converge");
    }
    return recurse(f, a, m, fa, lm, fm, left, 0.5 * tol, depth - 1) +
           recurse(f, m, b, fm, rm, fb, right, 0.5 * tol, depth - 1);
  }
};

}  // namespace

GaussianMoments quadrature_moments(const LossyParams& p, double t,
                                   double quad_tol) {
  validate_params(p);
  if (!(quad_tol > 0.0)) {
    throw std::domain_error("quadrature_moments: quad_tol must be > 0");
  }
  if (std::isnan(t) || t < 0.0 || t > p.t_max) {
    throw std::domain_error("quadrature_moments: t must lie in [0, t_max]");
  }

  const double comm = p.stat == StatKind::Quantum ? 1.0 : 0.0;

  // Explicit solution of the Langevin pair equations: the initial thermal
  // amplitudes squeezed by Delta(t, 0) and damped by e^{-lambda t}, plus
  // noise injected at t' that is squeezed by the remaining Delta(t, t').
  const auto n_kernel = [&](double t1) {
    const double d = delta_kernel(p, t, t1);
    const double ch = std::cosh(d);
    const double sh = std::sinh(d);
    return p.n0 * ch * ch + (p.n0 + comm) * sh * sh;
  };
  const auto a_kernel = [&](double t1) {
    const double d = delta_kernel(p, t, t1);
    return (p.n0 + 0.5 * comm) * std::sinh(2.0 * d);
  };

  const double damp = std::exp(-2.0 * p.lambda * t);
  double n = damp * n_kernel(0.0);
  double A = damp * a_kernel(0.0);

  if (p.lambda > 0.0 && t > 0.0) {
    SimpsonQuad quad;
    const auto n_integrand = [&](double t1) {
      return std::exp(-2.0 * p.lambda * (t - t1)) * 2.0 * p.lambda *
             n_kernel(t1);
    };
    const auto a_integrand = [&](double t1) {
      return std::exp(-2.0 * p.lambda * (t - t1)) * 2.0 * p.lambda *
             a_kernel(t1);
    };
    n += quad.integrate(n_integrand, 0.0, t, quad_tol);
    A += quad.integrate(a_integrand, 0.0, t, quad_tol);
  }

  MomentTrajectory proto;
  proto.stat = p.stat;
  proto.occupation = {n};
  proto.pairing = {A};
  proto.time = {t};
  return proto.moments_at(0);
}

}  // namespace pdc
