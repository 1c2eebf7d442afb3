#include "dsa/sjde.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dsa {

void SjdeState::apply(int pu, const RealObservationPair& obs) {
  pilot_energy[pu] += obs.pilot_power;
  pilot_quartic[pu] += obs.pilot_power * obs.pilot_power;
  obs_sum[pu][0] += obs.y1;
  obs_sum[pu][1] += obs.y2;
}

double mmse_estimate(double obs_sum, double pilot_energy,
                     const ChannelPrior& prior) {
  const double rho = prior.prior_ratio();
  return (obs_sum + prior.mean_re * rho) / (pilot_energy + rho);
}

double llr(double obs_sum, double pilot_energy, const ChannelPrior& prior) {
  const double rho = prior.prior_ratio();
  const double num = obs_sum + prior.mean_re * rho;
  const double quad = num * num / (prior.noise_var * (pilot_energy + rho));
  const double prior_term =
      prior.mean_re * prior.mean_re / (2.0 * prior.variance_re);
  return quad - prior_term - 0.5 * std::log1p(pilot_energy / rho);
}

double posterior_variance(double pilot_energy, const ChannelPrior& prior) {
  return (prior.noise_var / 2.0) / (pilot_energy + prior.prior_ratio());
}

bool should_stop(double total_pilot_energy, double gamma) {
  return total_pilot_energy >= gamma;
}

double decision_threshold(const CostWeights& w, double estimate_norm2) {
  const double denom = w.c1 + w.ce * estimate_norm2;
  if (w.c0 == 0.0 && denom == 0.0)
    throw std::invalid_argument("decision_threshold: degenerate weights");
  if (w.c0 == 0.0) return -std::numeric_limits<double>::infinity();
  if (denom == 0.0) return std::numeric_limits<double>::infinity();
  return std::log(w.c0) - std::log(denom);
}

JointDecision decide(double llr_value, std::vector<double> estimates,
                     const CostWeights& w) {
  double s = 0.0;
  for (double e : estimates) s += e * e;
  JointDecision d;
  d.llr = llr_value;
  d.threshold = decision_threshold(w, s);
  d.decision = llr_value >= d.threshold ? 1 : 0;
  d.estimates = std::move(estimates);
  return d;
}

double global_llr(std::span<const SjdeState> states,
                  std::span<const std::array<ChannelPrior, 2>> priors) {
  if (states.empty()) return 0.0;
  if (priors.size() != states.size())
    throw std::invalid_argument("global_llr: priors/states size mismatch");
  double total = 0.0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k].t != states[0].t)
      throw std::invalid_argument("global_llr: mismatched sample counts");
    for (int i = 0; i < 2; ++i)
      for (int n = 0; n < 2; ++n)
        total += llr(states[k].obs_sum[i][n], states[k].pilot_energy[i],
                     priors[k][i]);
  }
  return total;
}

double empirical_combined_cost(std::span<const DetectionOutcome> trials,
                               const CostWeights& w) {
  long n0 = 0, n1 = 0;
  double false_alarms = 0.0;
  double h1_sum = 0.0;
  for (const auto& trial : trials) {
    if (trial.truth == Hypothesis::idle) {
      ++n0;
      if (trial.decision == 1) false_alarms += 1.0;
    } else {
      ++n1;
      double term = trial.decision == 0 ? w.c1 : 0.0;
      for (std::size_t c = 0; c < trial.estimates.size(); ++c) {
        const double h = trial.true_components[c];
        if (trial.decision == 1) {
          const double err = trial.estimates[c] - h;
          term += w.ce * err * err;
        } else {
          term += w.ce * h * h;
        }
      }
      h1_sum += term;
    }
  }
  if (n0 == 0 || n1 == 0)
    throw std::invalid_argument(
        "empirical_combined_cost: need trials under both hypotheses");
  return w.c0 * (false_alarms / double(n0)) + h1_sum / double(n1);
}

}  // namespace dsa
