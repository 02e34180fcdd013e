#pragma once

#include <Eigen/Dense>

namespace zenoscope::analytic {

// Two forms of the absorption rate circulate for this model; they differ by a
// factor of two in the log. full_log (-ln(theta)/tau) is the one the exact
// ensemble oracle confirms (the per-block V-probability attenuation is
// theta^2 = exp(-2*gamma0*tau)); it is the default everywhere. The constant
// is configuration, not a hard-coded choice.
enum class Gamma0Convention { full_log, half_log };
inline constexpr Gamma0Convention kDefaultGamma0Convention =
    Gamma0Convention::full_log;

// Below this theta the averaged-survival model degenerates (gamma0 diverges)
// and model_survival switches to the projective-limit exponential.
inline constexpr double kProjectiveThetaSwitch = 1e-6;

struct RateSet {
  double gamma;   // polarisation decay rate
  double gamma0;  // absorption rate at the polarisers
  double s;       // sqrt(gamma^2 + gamma0^2)
  double nu;      // effective measurement rate (1 - theta) / ((1 + theta) tau)
};

/// Polarisation decay rate (1 + c*theta) / (1 - c*theta) * delta_phi^2 / tau.
/// Increasing in theta for c > 0, decreasing for c < 0, flat at c = 0 — the
/// Zeno / anti-Zeno statement at the rate level. Throws when c*theta >= 1.
double decay_rate_gamma(double delta_phi, double tau, double c, double theta);

/// -ln(theta)/tau (or half that under half_log). Returns 0 at theta = 1 and
/// +infinity at theta = 0; callers branch to the projective limit on the
/// infinite value.
double absorption_rate_gamma0(
    double theta, double tau,
    Gamma0Convention convention = kDefaultGamma0Convention);

// (1 - theta) / ((1 + theta) tau); the reciprocal time over which a chain of
// partially-selective measurements performs state selection. Equals
// 1 / (2 pi F(0)) with F the control spectrum.
double effective_measurement_rate(double theta, double tau);

RateSet make_rate_set(double delta_phi, double tau, double c, double theta,
                      Gamma0Convention convention = kDefaultGamma0Convention);

// RateSet with gamma and gamma0 given directly (s and nu filled in); used by
// the decay-rate fitters where gamma is the free parameter.
RateSet rate_set_from_rates(double gamma, double gamma0, double theta,
                            double tau);

/// Closed-form survival after k equal-sign blocks, valid for every theta in
/// [0, 1]. Evaluated through the complex eigenvalue pair so it is continuous
/// through the discriminant-zero point; reduces to cos^2(k*delta_phi) at
/// theta = 1 and to cos^(2k)(delta_phi) at theta = 0. k = 0 returns 1.
double nonrandom_survival(int k, double delta_phi, double theta);

/// Small-angle exponential limit exp(-delta_phi^2 t / (tau^2 nu)) of the
/// equal-sign chain, for delta_phi << 1 - theta. Throws at theta = 1 (nu = 0).
double zeno_exponential(double t, double delta_phi, double tau, double theta);

/// Averaged survival exp(-(gamma+gamma0) t) (cosh(S t) + gamma0/S sinh(S t)),
/// assembled from decaying exponentials so large S*t cannot overflow.
/// gamma0 = 0 reduces to (1 + exp(-2 gamma t)) / 2 (full depolarisation,
/// limit 1/2); S = 0 returns 1.
double averaged_survival(double t, const RateSet& rates);

/// exp(-gamma t); the weakly-selective limit gamma0 << gamma.
double weak_measurement_survival(double t, double gamma);

/// Right-hand side of the coupled rate equations:
///   dP_H/dt = -gamma P_H + gamma P_V
///   dP_V/dt =  gamma P_H - (gamma + 2 gamma0) P_V
Eigen::Vector2d rate_equation_rhs(double p_h, double p_v,
                                  const RateSet& rates);

struct ValidityReport {
  bool valid;
  double ratio;  // delta_phi^2 / ((1 - c)(1 - c theta))
};

/// Small-jump validity condition delta_phi^2 << (1 - c)(1 - c theta) for the
/// averaged model; `epsilon` is the "<<" threshold. Reported, never enforced.
ValidityReport validity_check(double delta_phi, double c, double theta,
                              double epsilon = 0.1);

/// Survival prediction with the regime branches resolved: theta below
/// kProjectiveThetaSwitch uses the projective-limit exponential, everything
/// else the averaged closed form.
double model_survival(double t, double delta_phi, double tau, double c,
                      double theta,
                      Gamma0Convention convention = kDefaultGamma0Convention);

}  // namespace zenoscope::analytic
