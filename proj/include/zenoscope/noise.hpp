#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <span>

namespace zenoscope::noise {

// Repeat probability p = (c + 1) / 2 of the telegraph chain. Throws for c
// outside [-1, 1].
double correlation_probability(double c);

// One realisation of the correlated dichotomous jump process.
struct JumpSequence {
  Eigen::VectorXd jumps;   // signed angles, |jumps[k]| = delta_phi
  std::uint64_t seed = 0;  // stream seed that produced this sequence
};

/// First sign is +1 or -1 with probability 1/2 each; every later sign repeats
/// its predecessor with probability p = (c + 1) / 2 and flips otherwise.
/// Fully determined by stream_seed (generator pinned in rng.hpp).
JumpSequence generate_jump_sequence(int n_blocks, double delta_phi, double c,
                                    std::uint64_t stream_seed);

// Same stream, written into caller storage jumps[0..n_blocks).
void generate_jumps_into(int n_blocks, double delta_phi, double c,
                         std::uint64_t stream_seed, double* jumps);

struct CorrelationEstimate {
  double c_hat;
  double std_error;
  std::size_t n_pairs;
};

/// Mean lag-1 sign product over an ensemble, which estimates the correlation
/// parameter the sequences were generated with, plus its standard error.
CorrelationEstimate empirical_correlation(
    std::span<const JumpSequence> sequences);

}  // namespace zenoscope::noise
