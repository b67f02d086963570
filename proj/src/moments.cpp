#include "pdc/moments.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pdc {

GaussianMoments thermal_state(double n0, StatKind stat) {
  if (!std::isfinite(n0) || n0 < 0.0) {
    throw std::domain_error("thermal_state: occupation n0 must be finite and >= 0, got " +
                            std::to_string(n0));
  }
  GaussianMoments g;
  g.normal = MomentScalar(n0) * MomentMatrix::Identity();
  g.anomalous.setZero();
  g.stat = stat;
  return g;
}

std::string MomentViolation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::NonFinite:
      os << "non-finite entry";
      break;
    case Kind::NotHermitian:
      os << "normal matrix not Hermitian";
      break;
    case Kind::NegativeDiagonal:
      os << "negative occupation";
      break;
    case Kind::NotSymmetric:
      os << "anomalous matrix not symmetric";
      break;
    case Kind::PairBoundExceeded:
      os << "pair correlation exceeds Cauchy-Schwarz bound";
      break;
  }
  os << " at (" << i << ", " << j << "), excess " << magnitude;
  return os.str();
}

namespace {

bool finite(const MomentScalar& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

std::vector<MomentViolation> validate(const GaussianMoments& g, double tol) {
  std::vector<MomentViolation> out;
  using Kind = MomentViolation::Kind;

  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (!finite(g.normal(i, j)) || !finite(g.anomalous(i, j))) {
        out.push_back({Kind::NonFinite, i, j,
                       std::numeric_limits<double>::quiet_NaN()});
      }
    }
  }
  if (!out.empty()) return out;  // comparisons below would be meaningless

  // Scale-aware slack: occupations can be large, so allow tol relative to
  // the local magnitude with an absolute floor of tol itself.
  auto slack = [tol](double scale) { return tol * std::max(1.0, scale); };

  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      const double herm =
          std::abs(g.normal(i, j) - std::conj(g.normal(j, i)));
      if (herm > slack(std::abs(g.normal(i, j)))) {
        out.push_back({Kind::NotHermitian, i, j, herm});
      }
      const double sym = std::abs(g.anomalous(i, j) - g.anomalous(j, i));
      if (sym > slack(std::abs(g.anomalous(i, j)))) {
        out.push_back({Kind::NotSymmetric, i, j, sym});
      }
    }
    const double diag = g.normal(i, i).real();
    if (diag < -slack(std::abs(diag))) {
      out.push_back({Kind::NegativeDiagonal, i, i, -diag});
    }
  }

  // |<a_i a_j>|^2 <= n_i (n_j + 1) for quantum, n_i n_j for classical,
  // over ordered pairs i != j; equality (two-mode squeezed vacuum) allowed.
  const double comm = g.stat == StatKind::Quantum ? 1.0 : 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      const double ni = g.normal(i, i).real();
      const double nj = g.normal(j, j).real();
      const double bound = ni * (nj + comm);
      const double mag2 = std::norm(g.anomalous(i, j));
      if (mag2 > bound + slack(bound)) {
        out.push_back({Kind::PairBoundExceeded, i, j, mag2 - bound});
      }
    }
  }
  return out;
}

}  // namespace pdc
