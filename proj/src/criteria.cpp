#include "pdc/criteria.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pdc {

namespace {

using Scalar = MomentScalar;  // extended precision, see moments.hpp

void require_domain(bool ok, const std::string& msg) {
  if (!ok) throw std::domain_error(msg);
}

}  // namespace

void validate_spec(const CorrelatorSpec& s) {
  if (s.n < 1 || s.k < 0 || s.k > s.l || s.l > s.m || s.m > s.n) {
    throw std::invalid_argument(
        "CorrelatorSpec: require n >= 1 and 0 <= k <= l <= m <= n, got n=" +
        std::to_string(s.n) + " m=" + std::to_string(s.m) +
        " l=" + std::to_string(s.l) + " k=" + std::to_string(s.k));
  }
}

double total_number(const GaussianMoments& g) {
  return static_cast<double>(g.normal.trace().real());
}

namespace {

// One term of a Stokes component: coeff * a+_create a_annihilate.
struct Bilinear {
  Scalar coeff;
  int create;
  int annihilate;
};

// A mode superposition c = sum_i amp[i] a_i; c+ c expands into bilinears
// conj(amp[i]) amp[j] a+_i a_j.
using Superposition = std::array<Scalar, 4>;

void add_number_op(std::vector<Bilinear>& out, const Superposition& c,
                   Scalar scale) {
  for (int i = 0; i < 4; ++i) {
    if (c[i] == Scalar{}) continue;
    for (int j = 0; j < 4; ++j) {
      if (c[j] == Scalar{}) continue;
      out.push_back({scale * std::conj(c[i]) * c[j], i, j});
    }
  }
}

// Stokes pseudo-spin component for one arm: half the intensity difference
// between two orthogonal polarization modes c, d: J = (c+ c - d+ d) / 2.
std::vector<Bilinear> stokes_component(const Superposition& c,
                                       const Superposition& d) {
  std::vector<Bilinear> out;
  add_number_op(out, c, Scalar{0.5L});
  add_number_op(out, d, Scalar{-0.5L});
  return out;
}

// The three total Stokes components J_u = J^A_u + J^B_u, built from the
// h/v basis (z), the +/-45 degree basis (x) and the circular basis (y)
// of each arm.
std::array<std::vector<Bilinear>, 3> total_stokes() {
  constexpr MomentReal inv_sqrt2 = 0.7071067811865475244008443621L;
  const Scalar i_unit{0.0L, 1.0L};

  std::array<std::vector<Bilinear>, 3> J;
  for (Arm arm : {Arm::A, Arm::B}) {
    const int h = ModeIndex{arm, Polarization::H}.flat();
    const int v = ModeIndex{arm, Polarization::V}.flat();

    Superposition mode_h{}, mode_v{}, plus{}, minus{}, left{}, right{};
    mode_h[h] = 1.0L;
    mode_v[v] = 1.0L;
    plus[h] = inv_sqrt2;
    plus[v] = inv_sqrt2;
    minus[h] = inv_sqrt2;
    minus[v] = -inv_sqrt2;
    left[h] = inv_sqrt2;
    left[v] = i_unit * inv_sqrt2;
    right[h] = inv_sqrt2;
    right[v] = -i_unit * inv_sqrt2;

    for (auto& term : stokes_component(plus, minus)) J[0].push_back(term);
    for (auto& term : stokes_component(left, right)) J[1].push_back(term);
    for (auto& term : stokes_component(mode_h, mode_v)) J[2].push_back(term);
  }
  return J;
}

}  // namespace

double j_squared(const GaussianMoments& g) {
  static const std::array<std::vector<Bilinear>, 3> J = total_stokes();

  // The quartic terms grow like n^2 while their sum can be O(n0) (J^2 is
  // conserved under the squeezing); the near-complete cancellation stays in
  // the extended precision of the moment engine until the final return.
  Scalar total{};
  std::array<OperatorFactor, 4> factors;
  for (const auto& component : J) {
    for (const Bilinear& p : component) {
      for (const Bilinear& q : component) {
        factors[0] = creator(mode_from_flat(p.create));
        factors[1] = annihilator(mode_from_flat(p.annihilate));
        factors[2] = creator(mode_from_flat(q.create));
        factors[3] = annihilator(mode_from_flat(q.annihilate));
        const Scalar w = wick_moment(g, factors);
        if (w != Scalar{}) total += p.coeff * q.coeff * w;
      }
    }
  }
  return static_cast<double>(total.real());
}

CriterionReport separability_ratio(const GaussianMoments& g) {
  CriterionReport rep;
  rep.j_squared = j_squared(g);
  rep.total_n = total_number(g);
  require_domain(rep.total_n > 0.0,
                 "separability_ratio: ratio undefined at zero total photon "
                 "number (vacuum)");
  rep.ratio = rep.j_squared / rep.total_n;
  rep.entangled = g.stat == StatKind::Quantum && rep.ratio < 0.5;
  return rep;
}

double closed_form_ratio(const SteadyParams& p) {
  validate_params(p);
  const double sh2 = std::sinh(p.r) * std::sinh(p.r);
  if (p.stat == StatKind::Classical) {
    return 3.0 * p.n0 / (4.0 * (1.0 + 2.0 * sh2));
  }
  if (p.n0 == 0.0) return 0.0;  // limit value at the quantum vacuum
  const double n_of_r = sh2 + p.n0 * (1.0 + 2.0 * sh2);
  return 3.0 * p.n0 * (p.n0 + 1.0) / (4.0 * n_of_r);
}

double entanglement_threshold(double n0) {
  require_domain(std::isfinite(n0) && n0 >= 0.0,
                 "entanglement_threshold: n0 must be finite and >= 0");
  const double sh2 = n0 * (3.0 * n0 + 1.0) / (2.0 * (2.0 * n0 + 1.0));
  return std::asinh(std::sqrt(sh2));
}

namespace {

// The 2n-factor string for <B+ B>: daggered factors with exponents in
// reverse order, then the B string itself,
//   B = (b_v)^(n-m) (b_h)^(m-l) (a_v)^(l-k) (a_h)^k.
std::vector<OperatorFactor> b_string(const CorrelatorSpec& s) {
  std::vector<OperatorFactor> f;
  f.reserve(2 * static_cast<std::size_t>(s.n));
  auto repeat = [&f](ModeIndex m, bool dag, int count) {
    for (int i = 0; i < count; ++i) f.push_back({m, dag});
  };
  repeat(kModeAh, true, s.k);
  repeat(kModeAv, true, s.l - s.k);
  repeat(kModeBh, true, s.m - s.l);
  repeat(kModeBv, true, s.n - s.m);
  repeat(kModeBv, false, s.n - s.m);
  repeat(kModeBh, false, s.m - s.l);
  repeat(kModeAv, false, s.l - s.k);
  repeat(kModeAh, false, s.k);
  return f;
}

std::vector<OperatorFactor> cross_string(const CorrelatorSpec& a,
                                         const CorrelatorSpec& b) {
  std::vector<OperatorFactor> f;
  auto repeat = [&f](ModeIndex m, bool dag, int count) {
    for (int i = 0; i < count; ++i) f.push_back({m, dag});
  };
  repeat(kModeAh, true, a.k);
  repeat(kModeAv, true, a.l - a.k);
  repeat(kModeBh, true, a.m - a.l);
  repeat(kModeBv, true, a.n - a.m);
  repeat(kModeBv, false, b.n - b.m);
  repeat(kModeBh, false, b.m - b.l);
  repeat(kModeAv, false, b.l - b.k);
  repeat(kModeAh, false, b.k);
  return f;
}

}  // namespace

double b_correlator(const GaussianMoments& g, const CorrelatorSpec& spec,
                    std::size_t max_factors) {
  validate_spec(spec);
  const auto factors = b_string(spec);
  return static_cast<double>(wick_moment(g, factors, max_factors).real());
}

std::complex<double> cross_correlator(const GaussianMoments& g,
                                      const CorrelatorSpec& a,
                                      const CorrelatorSpec& b,
                                      std::size_t max_factors) {
  validate_spec(a);
  validate_spec(b);
  const auto factors = cross_string(a, b);
  const Scalar v = wick_moment(g, factors, max_factors);
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

std::vector<std::pair<double, double>> qc_ratio(const CorrelatorSpec& spec,
                                                const SteadyParams& params_q,
                                                std::span<const double> r_values) {
  validate_spec(spec);
  require_domain(params_q.stat == StatKind::Quantum,
                 "qc_ratio: reference params must be quantum statistics");
  validate_params(params_q);

  // Off-diagonal pairs that vanish by contraction structure: the squeezing
  // channels only match a+_h with b_v, a+_v with b_h and each mode with
  // itself, so any mismatch in those counts kills every pairing. Checked
  // here as a structural self-test on both statistics.
  const struct {
    CorrelatorSpec a, b;
  } vanishing_pairs[] = {
      {{2, 1, 1, 1}, {2, 2, 2, 2}},  // a_h b_v  vs  a_h^2 (channel mismatch)
      {{1, 1, 1, 1}, {2, 2, 2, 2}},  // odd total order
      {{1, 0, 0, 0}, {1, 1, 1, 1}},  // b_v vs a_h (one cross channel only)
      {{3, 2, 1, 0}, {3, 3, 3, 3}},  // a_v b_h b_v  vs  a_h^3
  };

  std::vector<std::pair<double, double>> out;
  out.reserve(r_values.size());
  for (const double r : r_values) {
    SteadyParams pq = params_q;
    pq.r = r;
    SteadyParams pc{r, params_q.n0 + 0.5, StatKind::Classical};
    const GaussianMoments gq = evolve_lossless(pq);
    const GaussianMoments gc = evolve_lossless(pc);

    for (const auto& pair : vanishing_pairs) {
      for (const GaussianMoments* g : {&gq, &gc}) {
        const double mag = std::abs(cross_correlator(*g, pair.a, pair.b));
        if (mag > 1e-10) {
          throw std::runtime_error(
              "qc_ratio: structurally-vanishing cross correlator came out " +
              std::to_string(mag));
        }
      }
    }

    const double bq = b_correlator(gq, spec);
    const double bc = b_correlator(gc, spec);
    require_domain(bc != 0.0,
                   "qc_ratio: classical denominator vanished at r=" +
                       std::to_string(r));
    out.emplace_back(r, bq / bc);
  }
  return out;
}

}  // namespace pdc
