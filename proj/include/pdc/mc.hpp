#ifndef PDC_MC_HPP
#define PDC_MC_HPP

#include <cstdint>
#include <variant>

#include "pdc/dynamics.hpp"

namespace pdc {

// Monte Carlo classical-amplitude oracle: samples the stochastic
// hidden-variable model directly (complex Gaussian initial amplitudes,
// deterministic or noisy propagation), no moment algebra anywhere.
struct McConfig {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  std::variant<SteadyParams, LossyParams> params = SteadyParams{};
};

enum class McObservable { JSquared, TotalN, Ratio };

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

// Draws each of the four initial amplitudes as a circular complex Gaussian
// with <|a|^2> = n0, propagates per sample (lossless: the classical
// counterpart of the Bogoliubov map; lossy: Euler-Maruyama with complex
// white noise of strength 2*lambda*n0 per mode), and averages the
// observable. Ratio uses the delta method for its standard error.
// Sampling is split into fixed-size blocks, each with its own RNG stream
// derived from (seed, block); the accumulation order is fixed, so results
// are bit-identical for identical (config, seed) regardless of platform.
// Throws std::invalid_argument for quantum-statistics params or
// samples == 0; std::domain_error propagates from parameter validation.
McEstimate mc_estimate(const McConfig& config, McObservable observable);

}  // namespace pdc

#endif  // PDC_MC_HPP
