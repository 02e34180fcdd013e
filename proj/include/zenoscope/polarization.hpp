#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <concepts>
#include <stdexcept>

namespace zenoscope::polarization {

// Real amplitude pair (a_H, a_V); index 0 is horizontal. The state is kept
// unnormalised: its squared norm is the survival probability accumulated so
// far, and a_H^2 is the probability of detecting the photon horizontally
// polarised right now.
using PolarisationAmplitudes = Eigen::Vector2d;

inline PolarisationAmplitudes horizontal_state() { return {1.0, 0.0}; }

template <std::floating_point Scalar>
void require_measurement_strength(Scalar theta) {
  if (!(theta >= Scalar(0) && theta <= Scalar(1)))
    throw std::domain_error("measurement strength theta must lie in [0, 1]");
}

/// Planar rotation of the linear-polarisation angle by delta_phi, acting on
/// (a_H, a_V). Orthogonal with determinant one; the dynamics never leaves the
/// real H/V plane, so no complex amplitudes are needed.
template <std::floating_point Scalar>
Eigen::Matrix<Scalar, 2, 2> rotation_matrix(Scalar delta_phi) {
  const Scalar c = std::cos(delta_phi);
  const Scalar s = std::sin(delta_phi);
  Eigen::Matrix<Scalar, 2, 2> u;
  u << c, -s,
       s,  c;
  return u;
}

/// Partially-selective measurement diag(1, theta): transmits H untouched and
/// attenuates the V amplitude by theta. Non-expansive for theta in [0, 1];
/// theta = 0 is the projective limit, theta = 1 the identity.
template <std::floating_point Scalar>
Eigen::Matrix<Scalar, 2, 2> measurement_matrix(Scalar theta) {
  require_measurement_strength(theta);
  Eigen::Matrix<Scalar, 2, 2> pi = Eigen::Matrix<Scalar, 2, 2>::Zero();
  pi(0, 0) = Scalar(1);
  pi(1, 1) = theta;
  return pi;
}

/// One block of the chain: rotate by `jump`, then measure with strength theta.
/// Norm never increases.
template <class Derived, std::floating_point Scalar = typename Derived::Scalar>
Eigen::Vector2<Scalar> apply_block(const Eigen::MatrixBase<Derived>& state,
                                   Scalar jump, Scalar theta) {
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(Derived, 2);
  require_measurement_strength(theta);
  const Scalar c = std::cos(jump);
  const Scalar s = std::sin(jump);
  return {c * state(0) - s * state(1),
          theta * (s * state(0) + c * state(1))};
}

// Core loop shared with the ensemble driver; writes a_H^2 after block k into
// out[k-1] for k = 1..n, starting from (1, 0).
inline void trajectory_survival_into(const double* jumps, Eigen::Index n,
                                     double theta, double* out) {
  require_measurement_strength(theta);
  double h = 1.0;
  double v = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double c = std::cos(jumps[k]);
    const double s = std::sin(jumps[k]);
    const double h_next = c * h - s * v;
    v = theta * (s * h + c * v);
    h = h_next;
    out[k] = h * h;
  }
}

/// Single-realisation survival record P_H(t_k), k = 1..jumps.size(). This is
/// the pre-averaging quantity; ensembles of it are what the Monte Carlo layer
/// averages.
inline Eigen::ArrayXd trajectory_survival(
    const Eigen::Ref<const Eigen::VectorXd>& jumps, double theta) {
  if (jumps.size() == 0)
    throw std::invalid_argument("trajectory_survival: empty jump sequence");
  Eigen::ArrayXd out(jumps.size());
  trajectory_survival_into(jumps.data(), jumps.size(), theta, out.data());
  return out;
}

/// Angle decomposition of the measurement as a laboratory polariser chain
/// would realise it: a pre-rotation by alpha = arctan(theta) ahead of the
/// projector passes the V component with the required relative weight, at the
/// price of attenuating both components by cos(alpha) per block relative to
/// the ideal operator diag(1, theta). The simulation always uses the ideal
/// operator; this documents the bookkeeping between the two.
struct RealizationAngles {
  double alpha;          // pre-rotation angle, radians
  double transmittance;  // global amplitude factor cos(alpha)
};

inline RealizationAngles realization_angles(double theta) {
  require_measurement_strength(theta);
  const double alpha = std::atan(theta);
  return {alpha, std::cos(alpha)};
}

}  // namespace zenoscope::polarization
