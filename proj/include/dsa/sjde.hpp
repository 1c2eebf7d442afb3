#pragma once

#include <array>
#include <span>
#include <vector>

#include "dsa/channel_model.hpp"

namespace dsa {

// Running sufficient statistics for one secondary user observing both PUs.
// pilot_energy[i] is the cumulative pilot power from PU i (the conditional
// Fisher information); obs_sum[i][n] accumulates the paired real
// observations; pilot_quartic[i] tracks sum |p_i[m]|^4 for the second-moment
// diagnostics. Time advances once per sample after both PUs' observations
// have been applied.
struct SjdeState {
  std::array<double, 2> pilot_energy{0.0, 0.0};
  std::array<std::array<double, 2>, 2> obs_sum{{{0.0, 0.0}, {0.0, 0.0}}};
  std::array<double, 2> pilot_quartic{0.0, 0.0};
  long t = 0;

  void apply(int pu, const RealObservationPair& obs);
  void advance() { ++t; }

  double total_pilot_energy() const { return pilot_energy[0] + pilot_energy[1]; }
};

struct CostWeights {
  double c0 = 0.2;
  double c1 = 0.2;
  double ce = 0.6;
};

struct JointDecision {
  int decision = 0;  // 1 declares the band busy
  double llr = 0.0;
  double threshold = 0.0;
  std::vector<double> estimates;
};

// Posterior mean of one real channel component given cumulative statistics.
double mmse_estimate(double obs_sum, double pilot_energy,
                     const ChannelPrior& prior);

// Marginalized log-likelihood ratio of one real channel.
double llr(double obs_sum, double pilot_energy, const ChannelPrior& prior);

// Posterior variance of one real component; equals the conditional MSE of
// mmse_estimate and depends on the data only through the pilot energy.
double posterior_variance(double pilot_energy, const ChannelPrior& prior);

bool should_stop(double total_pilot_energy, double gamma);

// Estimate-modified likelihood ratio threshold: log c0 - log(c1 + ce*s)
// where s is the sum of squared estimates. c0 = 0 maps to -inf (always
// declare busy); c0 > 0 with a zero denominator maps to +inf.
double decision_threshold(const CostWeights& w, double estimate_norm2);

JointDecision decide(double llr_value, std::vector<double> estimates,
                     const CostWeights& w);

// Sum of per-channel LLRs across SUs; all states must share the same t.
double global_llr(std::span<const SjdeState> states,
                  std::span<const std::array<ChannelPrior, 2>> priors);

// One detection/estimation outcome as seen by the combined cost.
struct DetectionOutcome {
  Hypothesis truth = Hypothesis::idle;
  int decision = 0;
  std::vector<double> estimates;
  std::vector<double> true_components;  // same layout as estimates
};

// Monte Carlo estimate of
//   c0 P0(d=1) + c1 P1(d=0) + ce sum_ch E1[(est-h)^2 1{d=1} + h^2 1{d=0}].
double empirical_combined_cost(std::span<const DetectionOutcome> trials,
                               const CostWeights& w);

}  // namespace dsa
