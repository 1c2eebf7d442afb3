#include "dsa/dsa_protocol.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dsa {

SuAgent make_su_agent(int id, bool is_tx, const LtParams& params) {
  SuAgent a;
  a.id = id;
  a.is_tx = is_tx;
  for (int i = 0; i < 2; ++i)
    for (int n = 0; n < 2; ++n) {
      a.samplers[i][n].delta = params.delta;
      a.samplers[i][n].phi = params.phi_at(i, id);
      a.samplers[i][n].bits = params.bits;
    }
  return a;
}

std::vector<LtMessage> su_step(SuAgent& agent,
                               const std::array<RealObservationPair, 2>& obs,
                               long t) {
  std::vector<LtMessage> out;
  for (int i = 0; i < 2; ++i) {
    agent.state.apply(i, obs[i]);
    const double y[2] = {obs[i].y1, obs[i].y2};
    for (int n = 0; n < 2; ++n) {
      auto m = sampler_update(agent.samplers[i][n], y[n], t, agent.id, i, n);
      if (m) out.push_back(*m);
    }
  }
  agent.state.advance();
  return out;
}

long FcState::total_messages() const {
  long total = 0;
  for (const auto& su : acc)
    for (const auto& pu : su)
      for (const auto& proc : pu) total += proc.message_count;
  return total;
}

void fc_step(FcState& fc, std::span<const LtMessage> messages,
             const std::array<double, 2>& pilot_powers, double gamma, long tp,
             const LtParams& params) {
  if (fc.stopped) return;
  ++fc.t;
  fc.pilot_energy[0] += pilot_powers[0];
  fc.pilot_energy[1] += pilot_powers[1];
  for (const auto& m : messages) {
    if (m.su_id < 0 || m.su_id >= fc.k_sus || m.pu_index < 0 ||
        m.pu_index > 1 || m.component < 0 || m.component > 1)
      throw std::out_of_range("fc_step: message for unknown process");
    // round-trip through the wire payload keeps the path bit-exact
    const auto [sign, index] =
        decode_payload(encode_payload(m.sign, m.quant_index, params.bits),
                       params.bits);
    LtMessage decoded = m;
    decoded.sign = sign;
    decoded.quant_index = index;
    fc.acc[m.su_id][m.pu_index][m.component].apply(reconstruct_increment(
        decoded, params.delta, params.phi_at(m.pu_index, m.su_id),
        params.bits));
  }
  if (fc.total_pilot_energy() >= gamma || fc.t >= tp) {
    fc.stopped = true;
    fc.tau = fc.t;
  }
}

std::vector<double> fc_estimate(
    const FcState& fc, std::span<const std::array<ChannelPrior, 2>> priors) {
  std::vector<double> est;
  est.reserve(std::size_t(fc.k_sus) * 4);
  for (int k = 0; k < fc.k_sus; ++k)
    for (int i = 0; i < 2; ++i)
      for (int n = 0; n < 2; ++n)
        est.push_back(mmse_estimate(fc.acc[k][i][n].recon_sum,
                                    fc.pilot_energy[i], priors[k][i]));
  return est;
}

double fc_global_llr(const FcState& fc,
                     std::span<const std::array<ChannelPrior, 2>> priors) {
  double total = 0.0;
  for (int k = 0; k < fc.k_sus; ++k)
    for (int i = 0; i < 2; ++i)
      for (int n = 0; n < 2; ++n)
        total +=
            llr(fc.acc[k][i][n].recon_sum, fc.pilot_energy[i], priors[k][i]);
  return total;
}

JointDecision fc_decide(const FcState& fc,
                        std::span<const std::array<ChannelPrior, 2>> priors,
                        const CostWeights& w) {
  return decide(fc_global_llr(fc, priors), fc_estimate(fc, priors), w);
}

int select_su(std::span<const int> tx_ids,
              std::span<const std::array<double, 2>> est_gain2, double cap1,
              double cap2) {
  if (tx_ids.empty()) throw std::invalid_argument("select_su: no candidates");
  if (tx_ids.size() != est_gain2.size())
    throw std::invalid_argument("select_su: size mismatch");
  const double inf = std::numeric_limits<double>::infinity();
  int best = tx_ids[0];
  double best_margin = -1.0;
  for (std::size_t j = 0; j < tx_ids.size(); ++j) {
    const double m1 = est_gain2[j][0] > 0.0 ? cap1 / est_gain2[j][0] : inf;
    const double m2 = est_gain2[j][1] > 0.0 ? cap2 / est_gain2[j][1] : inf;
    const double margin = std::min(m1, m2);
    if (margin > best_margin) {
      best_margin = margin;
      best = tx_ids[j];
    }
  }
  return best;
}

double compute_power(int decision, const std::array<double, 2>& est_gain2,
                     const std::array<double, 2>& calibrated_caps,
                     double pmax) {
  if (decision == 0) return pmax;
  double p = pmax;
  if (est_gain2[0] > 0.0) p = std::min(p, calibrated_caps[0] / est_gain2[0]);
  if (est_gain2[1] > 0.0) p = std::min(p, calibrated_caps[1] / est_gain2[1]);
  return p;
}

}  // namespace dsa
