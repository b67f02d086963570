#ifndef PDC_FOCK_HPP
#define PDC_FOCK_HPP

#include "pdc/criteria.hpp"

namespace pdc {

// Truncated-Fock-space quantum oracle: direct state-vector evolution of the
// four-mode vacuum under the pair-creation generator, no Gaussian assumption
// anywhere. Basis: all occupation vectors with total photons <= 2 * n_max.
struct FockConfig {
  int n_max = 10;  // per-pair photon cutoff; capacity capped at 12
  double r = 0.0;
};

inline constexpr int kFockMaxNmax = 12;

struct FockObservable {
  enum class Kind { JSquared, TotalN, BCorrelator };
  Kind kind = Kind::TotalN;
  CorrelatorSpec spec{};  // only read for BCorrelator

  static FockObservable j_squared() { return {Kind::JSquared, {}}; }
  static FockObservable total_n() { return {Kind::TotalN, {}}; }
  static FockObservable b_correlator(const CorrelatorSpec& s) {
    return {Kind::BCorrelator, s};
  }
};

struct FockResult {
  double value = 0.0;
  // Weight estimate of the discarded pair-number tail, tanh(r)^(2 n_max):
  // the two-mode squeezed vacuum populates pair number p with probability
  // proportional to tanh(r)^(2p).
  double truncation_error = 0.0;
};

// Evolves |vacuum> by exp(r K), K = a+_h b+_v - a+_v b+_h - h.c., using
// stepped Taylor expansion of the matrix exponential (K is applied as a
// sparse matrix; the anti-Hermitian generator keeps the state normalized,
// which is monitored). Then evaluates the observable exactly in the
// truncated space. Throws std::length_error if n_max > 12 (dimension
// overflow), std::domain_error for invalid n_max or r.
FockResult fock_expectation(const FockConfig& config,
                            const FockObservable& observable);

}  // namespace pdc

#endif  // PDC_FOCK_HPP
