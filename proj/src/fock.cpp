#include "pdc/fock.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace pdc {

namespace {

using Complex = std::complex<double>;

// Four-mode Fock basis truncated at a total photon number; occupation
// vectors are packed into one 32-bit key for the index lookup.
struct FockBasis {
  int total_cap;
  std::vector<std::array<std::uint8_t, 4>> states;
  std::unordered_map<std::uint32_t, std::size_t> index;
  // lowered[m][s] = index of (occ - e_m), or -1 when occ[m] == 0; the
  // creation step reuses the same table in reverse.
  std::array<std::vector<std::int32_t>, 4> lowered;

  static std::uint32_t key(const std::array<std::uint8_t, 4>& occ) {
    return static_cast<std::uint32_t>(occ[0]) |
           (static_cast<std::uint32_t>(occ[1]) << 8) |
           (static_cast<std::uint32_t>(occ[2]) << 16) |
           (static_cast<std::uint32_t>(occ[3]) << 24);
  }

  explicit FockBasis(int cap) : total_cap(cap) {
    for (int total = 0; total <= cap; ++total) {
      for (int n0 = 0; n0 <= total; ++n0) {
        for (int n1 = 0; n1 + n0 <= total; ++n1) {
          for (int n2 = 0; n0 + n1 + n2 <= total; ++n2) {
            const int n3 = total - n0 - n1 - n2;
            std::array<std::uint8_t, 4> occ = {
                static_cast<std::uint8_t>(n0), static_cast<std::uint8_t>(n1),
                static_cast<std::uint8_t>(n2), static_cast<std::uint8_t>(n3)};
            index.emplace(key(occ), states.size());
            states.push_back(occ);
          }
        }
      }
    }
    for (int m = 0; m < 4; ++m) {
      lowered[m].assign(states.size(), -1);
      for (std::size_t s = 0; s < states.size(); ++s) {
        auto occ = states[s];
        if (occ[m] == 0) continue;
        occ[m] = static_cast<std::uint8_t>(occ[m] - 1);
        lowered[m][s] = static_cast<std::int32_t>(index.at(key(occ)));
      }
    }
  }

  std::size_t dim() const { return states.size(); }
};

// psi_out += scale * a_mode psi (annihilation drops one photon).
void apply_annihilation(const FockBasis& basis, int mode, Complex scale,
                        const std::vector<Complex>& psi,
                        std::vector<Complex>* out) {
  const auto& low = basis.lowered[mode];
  for (std::size_t s = 0; s < basis.dim(); ++s) {
    if (low[s] < 0 || psi[s] == 0.0) continue;
    const int n = basis.states[s][mode];
    (*out)[static_cast<std::size_t>(low[s])] +=
        scale * std::sqrt(static_cast<double>(n)) * psi[s];
  }
}

// psi_out += scale * a+_mode psi; amplitudes leaving the truncated space are
// dropped, which is exactly the projected generator P K P (still
// anti-Hermitian, so the evolved norm stays 1; the lost weight is what the
// truncation-error estimate accounts for).
void apply_creation(const FockBasis& basis, int mode, Complex scale,
                    const std::vector<Complex>& psi,
                    std::vector<Complex>* out) {
  const auto& low = basis.lowered[mode];
  for (std::size_t s = 0; s < basis.dim(); ++s) {
    if (low[s] < 0) continue;
    const auto src = static_cast<std::size_t>(low[s]);
    if (psi[src] == 0.0) continue;
    const int n = basis.states[s][mode];  // occupation after raising
    (*out)[s] += scale * std::sqrt(static_cast<double>(n)) * psi[src];
  }
}

// K psi with K = a+_Ah a+_Bv - a+_Av a+_Bh - (h.c.): the anti-Hermitian
// pair-creation generator. Applied term by term; two-operator products are
// composed through a scratch vector.
struct Generator {
  const FockBasis& basis;
  mutable std::vector<Complex> scratch;

  explicit Generator(const FockBasis& b) : basis(b), scratch(b.dim()) {}

  void pair_term(int first, int second, bool dagger, Complex scale,
                 const std::vector<Complex>& psi,
                 std::vector<Complex>* out) const {
    std::fill(scratch.begin(), scratch.end(), Complex{0.0, 0.0});
    if (dagger) {
      apply_creation(basis, second, 1.0, psi, &scratch);
      apply_creation(basis, first, scale, scratch, out);
    } else {
      apply_annihilation(basis, second, 1.0, psi, &scratch);
      apply_annihilation(basis, first, scale, scratch, out);
    }
  }

  std::vector<Complex> apply(const std::vector<Complex>& psi) const {
    std::vector<Complex> out(basis.dim(), Complex{0.0, 0.0});
    const int ah = kModeAh.flat(), av = kModeAv.flat();
    const int bh = kModeBh.flat(), bv = kModeBv.flat();
    pair_term(ah, bv, true, 1.0, psi, &out);   // + a+_h b+_v
    pair_term(av, bh, true, -1.0, psi, &out);  // - a+_v b+_h
    pair_term(ah, bv, false, -1.0, psi, &out);  // - b_v a_h (h.c.)
    pair_term(av, bh, false, 1.0, psi, &out);   // + b_h a_v (h.c.)
    return out;
  }
};

double norm_sq(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return s;
}

// exp(r K) |vac> by stepped Taylor series: r is split into steps of at most
// 0.05 and each step's series is summed until the term norm underflows the
// accumulated state at machine precision. K is anti-Hermitian, so the norm
// is conserved; drift from truncation shows up in the final norm.
std::vector<Complex> evolve_vacuum(const FockBasis& basis, double r) {
  std::vector<Complex> psi(basis.dim(), Complex{0.0, 0.0});
  psi[basis.index.at(FockBasis::key({0, 0, 0, 0}))] = 1.0;
  if (r == 0.0) return psi;

  const Generator gen(basis);
  const int steps = std::max(1, static_cast<int>(std::ceil(r / 0.05)));
  const double h = r / steps;
  for (int s = 0; s < steps; ++s) {
    std::vector<Complex> term = psi;
    for (int order = 1; order <= 64; ++order) {
      std::vector<Complex> next = gen.apply(term);
      const double factor = h / order;
      for (auto& z : next) z *= factor;
      term = std::move(next);
      for (std::size_t i = 0; i < psi.size(); ++i) psi[i] += term[i];
      if (norm_sq(term) < 1e-34 * norm_sq(psi)) break;
    }
  }
  return psi;
}

}  // namespace

FockResult fock_expectation(const FockConfig& config,
                            const FockObservable& observable) {
  if (config.n_max < 1 || !std::isfinite(config.r) || config.r < 0.0) {
    throw std::domain_error(
        "fock_expectation: require n_max >= 1 and finite r >= 0");
  }
  if (config.n_max > kFockMaxNmax) {
    throw std::length_error(
        "fock_expectation: n_max > " + std::to_string(kFockMaxNmax) +
        " overflows the truncated-space budget");
  }

  const FockBasis basis(2 * config.n_max);
  const std::vector<Complex> psi = evolve_vacuum(basis, config.r);

  FockResult res;
  const double th = std::tanh(config.r);
  res.truncation_error = config.r == 0.0 ? 0.0 : std::pow(th, 2 * config.n_max);

  switch (observable.kind) {
    case FockObservable::Kind::TotalN: {
      double total = 0.0;
      for (std::size_t s = 0; s < basis.dim(); ++s) {
        const auto& occ = basis.states[s];
        total += (occ[0] + occ[1] + occ[2] + occ[3]) * std::norm(psi[s]);
      }
      res.value = total;
      break;
    }
    case FockObservable::Kind::JSquared: {
      // <J^2> = sum_u ||J_u psi||^2 since each component is Hermitian.
      // J_z per arm is diagonal; J_x, J_y act within fixed per-arm totals.
      double total = 0.0;
      std::vector<Complex> jpsi(basis.dim());
      for (int u = 0; u < 3; ++u) {
        std::fill(jpsi.begin(), jpsi.end(), Complex{0.0, 0.0});
        for (Arm arm : {Arm::A, Arm::B}) {
          const int h = ModeIndex{arm, Polarization::H}.flat();
          const int v = ModeIndex{arm, Polarization::V}.flat();
          // J_z = (a+_h a_h - a+_v a_v)/2, J_x = (a+_h a_v + a+_v a_h)/2,
          // J_y = (a+_h a_v - a+_v a_h)/(2i).
          if (u == 2) {
            for (std::size_t s = 0; s < basis.dim(); ++s) {
              const auto& occ = basis.states[s];
              jpsi[s] += 0.5 * (occ[h] - occ[v]) * psi[s];
            }
          } else {
            std::vector<Complex> tmp(basis.dim(), Complex{0.0, 0.0});
            std::vector<Complex> hop(basis.dim(), Complex{0.0, 0.0});
            apply_annihilation(basis, v, 1.0, psi, &tmp);
            apply_creation(basis, h, 1.0, tmp, &hop);  // a+_h a_v
            std::fill(tmp.begin(), tmp.end(), Complex{0.0, 0.0});
            apply_annihilation(basis, h, 1.0, psi, &tmp);
            const Complex sign = u == 0 ? Complex{1.0, 0.0} : Complex{-1.0, 0.0};
            apply_creation(basis, v, sign, tmp, &hop);  // +/- a+_v a_h
            const Complex pref =
                u == 0 ? Complex{0.5, 0.0} : Complex{0.0, -0.5};
            for (std::size_t s = 0; s < basis.dim(); ++s) {
              jpsi[s] += pref * hop[s];
            }
          }
        }
        total += norm_sq(jpsi);
      }
      res.value = total;
      break;
    }
    case FockObservable::Kind::BCorrelator: {
      validate_spec(observable.spec);
      // <B+ B> = ||B psi||^2: apply the annihilation string right-to-left.
      std::vector<Complex> cur = psi;
      std::vector<Complex> next(basis.dim());
      auto apply_power = [&](int mode, int count) {
        for (int c = 0; c < count; ++c) {
          std::fill(next.begin(), next.end(), Complex{0.0, 0.0});
          apply_annihilation(basis, mode, 1.0, cur, &next);
          cur.swap(next);
        }
      };
      const CorrelatorSpec& sp = observable.spec;
      apply_power(kModeAh.flat(), sp.k);
      apply_power(kModeAv.flat(), sp.l - sp.k);
      apply_power(kModeBh.flat(), sp.m - sp.l);
      apply_power(kModeBv.flat(), sp.n - sp.m);
      res.value = norm_sq(cur);
      break;
    }
  }
  return res;
}

}  // namespace pdc
