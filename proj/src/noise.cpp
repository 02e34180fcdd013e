#include "zenoscope/noise.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "zenoscope/rng.hpp"

namespace zenoscope::noise {

double correlation_probability(double c) {
  if (!(c >= -1.0 && c <= 1.0))
    throw std::domain_error("correlation parameter c must lie in [-1, 1]");
  return (c + 1.0) / 2.0;
}

void generate_jumps_into(int n_blocks, double delta_phi, double c,
                         std::uint64_t stream_seed, double* jumps) {
  if (n_blocks < 1)
    throw std::invalid_argument("generate_jump_sequence: n_blocks must be >= 1");
  if (!(delta_phi > 0.0))
    throw std::domain_error("generate_jump_sequence: delta_phi must be > 0");
  const double p = correlation_probability(c);
  std::mt19937_64 gen(stream_seed);
  double sign = rng::uniform53(gen) < 0.5 ? 1.0 : -1.0;
  jumps[0] = sign * delta_phi;
  for (int k = 1; k < n_blocks; ++k) {
    if (!(rng::uniform53(gen) < p)) sign = -sign;
    jumps[k] = sign * delta_phi;
  }
}

JumpSequence generate_jump_sequence(int n_blocks, double delta_phi, double c,
                                    std::uint64_t stream_seed) {
  JumpSequence seq;
  seq.jumps.resize(n_blocks);
  seq.seed = stream_seed;
  generate_jumps_into(n_blocks, delta_phi, c, stream_seed, seq.jumps.data());
  return seq;
}

CorrelationEstimate empirical_correlation(
    std::span<const JumpSequence> sequences) {
  std::size_t n = 0;
  double sum = 0.0;
  for (const JumpSequence& seq : sequences) {
    for (Eigen::Index k = 0; k + 1 < seq.jumps.size(); ++k) {
      sum += std::copysign(1.0, seq.jumps[k]) *
             std::copysign(1.0, seq.jumps[k + 1]);
      ++n;
    }
  }
  if (n < 2)
    throw std::domain_error(
        "empirical_correlation: need at least two lag-1 pairs");
  const double mean = sum / static_cast<double>(n);
  // Products are +-1, so the sample variance has a closed form.
  const double var = (1.0 - mean * mean) *
                     (static_cast<double>(n) / static_cast<double>(n - 1));
  return {mean, std::sqrt(std::max(var, 0.0) / static_cast<double>(n)), n};
}

}  // namespace zenoscope::noise
